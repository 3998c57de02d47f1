#include <doctest.h>

#include <filesystem>
#include <map>
#include <sstream>

#include <unistd.h>

#include "commands.hpp"
#include "test_support.hpp"
#include "twophase/errors.hpp"
#include "twophase/estimators.hpp"
#include "twophase/io.hpp"
#include "twophase/simlab.hpp"

using namespace twophase;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "twophase");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Fresh directory under the system temp dir, removed on destruction.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("twophase_test_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

// estimator -> coefficient -> (estimate, se) from estimates.csv.
std::map<std::string, std::map<std::string, std::pair<double, double>>> read_estimates(const std::string& path) {
  const CsvTable t = read_csv_file(path);
  std::map<std::string, std::map<std::string, std::pair<double, double>>> out;
  for (const auto& row : t.rows) {
    if (row[6] != "ok") continue;
    out[row[0]][row[1]] = {std::stod(row[2]), std::stod(row[3])};
  }
  return out;
}

const char* kMeta = R"({"outcome": "Y", "family": "gaussian", "regressors": ["X", "Z"],
  "phase2": ["X"], "auxiliary": ["A"], "strata": "stratum", "inclusion": "R", "id": "id"})";

}  // namespace

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

TEST_CASE("CSV parse errors carry line numbers") {
  try {
    parse_csv("a,b\n1,2\n3\n");
    FAIL("ragged row accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    parse_csv("a,b\n\"1\n2\",3\n4,\"5\n");
    FAIL("unterminated quote accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  const auto ok = parse_csv("a,b\n\"x, \"\"y\"\"\",2\r\n");
  CHECK(ok.rows.size() == 1);
  CHECK(ok.rows[0][0] == "x, \"y\"");
  CHECK_THROWS_AS(parse_csv(""), ParseError);
  CHECK_THROWS_AS(parse_csv("a,a\n1,2\n"), ParseError);
  CHECK(is_missing_field("NA"));
  CHECK(is_missing_field("na"));
  CHECK(is_missing_field(""));
  CHECK_FALSE(is_missing_field("0"));
}

TEST_CASE("metadata and data errors") {
  CHECK_THROWS_AS(parse_metadata("{\"outcome\": "), ParseError);
  const auto meta = parse_metadata(kMeta);
  CHECK(meta.outcome == "Y");
  CHECK(meta.phase2 == std::vector<std::string>{"X"});
  const std::string header = "id,Y,Z,X,A,stratum,R\n";
  try {
    load_analysis(parse_csv(header + "1,0.5,1,2,3,0,1\n2,0.1,1,abc,3,0,1\n"), meta);
    FAIL("non-numeric value accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    load_analysis(parse_csv(header + "1,0.5,1,2,3,0,1\n2,0.1,1,NA,3,0,1\n"), meta);
    FAIL("missing phase-2 value on a sampled row accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    load_analysis(parse_csv(header + "1,0.5,1,2,3,0,1\n2,0.1,NA,1,3,0,0\n"), meta);
    FAIL("missing phase-1 value accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

TEST_CASE("analyze on a census reproduces the unweighted fit and is byte-stable") {
  TempDir dir("census");
  std::mt19937_64 rng(8);
  std::normal_distribution<double> nd;
  std::ostringstream csv;
  csv << "id,Y,Z,X,A,stratum,R\n";
  std::vector<double> y, z, x;
  for (int i = 0; i < 80; ++i) {
    z.push_back(nd(rng));
    x.push_back(nd(rng));
    y.push_back(1.0 + 0.5 * x.back() - z.back() + nd(rng));
    csv << i << ',' << format_full(y.back()) << ',' << format_full(z.back()) << ',' << format_full(x.back())
        << ',' << format_full(x.back() + nd(rng)) << ',' << (i % 2) << ",1\n";
  }
  write_text_file(dir.file("data.csv"), csv.str());
  write_text_file(dir.file("meta.json"), kMeta);
  const auto r1 = run({"analyze", dir.file("data.csv"), "--meta", dir.file("meta.json"), "--estimators", "ipw",
                       "--out", dir.file("a")});
  REQUIRE(r1.code == cli::kOk);
  const auto r2 = run({"analyze", dir.file("data.csv"), "--meta", dir.file("meta.json"), "--estimators", "ipw",
                       "--out", dir.file("b")});
  REQUIRE(r2.code == cli::kOk);
  CHECK(read_text_file(dir.file("a/estimates.csv")) == read_text_file(dir.file("b/estimates.csv")));
  CHECK(read_text_file(dir.file("a/estimates.txt")) == read_text_file(dir.file("b/estimates.txt")));
  CHECK(r1.out == r2.out);

  const auto frame = twophase::testing::make_frame(y, {{"Z", z}}, {{"X", x}});
  const ModelSpec spec{Family::gaussian_identity, "Y", {"X", "Z"}, std::nullopt};
  const auto fit = fit_weighted_glm(frame, spec, Eigen::VectorXd::Ones(80), all_rows(80));
  const auto est = read_estimates(dir.file("a/estimates.csv"));
  const auto names = spec.coefficient_names();
  for (std::size_t j = 0; j < names.size(); ++j) {
    CHECK(est.at("ipw").at(names[j]).first == doctest::Approx(fit.beta(static_cast<Eigen::Index>(j))).epsilon(1e-12));
  }
}

TEST_CASE("analyze on an exported simulation matches the API") {
  TempDir dir("export");
  const auto cfg = default_config(ScenarioId::tp_homoscedastic);
  const auto full = generate_population(cfg, 4);
  const auto design = draw_phase2(full, cfg, 4);
  write_text_file(dir.file("data.csv"), export_analysis_csv(full, design));
  write_text_file(dir.file("meta.json"), kMeta);
  const auto r = run({"analyze", dir.file("data.csv"), "--meta", dir.file("meta.json"), "--estimators",
                      "ipw,gr,stab_z,stab_rake", "--out", dir.file("out"), "--format", "md"});
  REQUIRE(r.code == cli::kOk);
  CHECK(fs::exists(dir.file("out/estimates.md")));
  const auto est = read_estimates(dir.file("out/estimates.csv"));
  REQUIRE(est.size() == 4);
  const auto frame = mask_unsampled(full, design);
  const ModelSpec spec = scenario_model(cfg);
  EstimatorPipeline pipe(frame, design, spec);
  for (EstimatorKind k : {EstimatorKind::ipw, EstimatorKind::gr, EstimatorKind::stab_z, EstimatorKind::stab_rake}) {
    CAPTURE(to_string(k));
    const auto rep = pipe.run(k);
    const auto& rows = est.at(to_string(k));
    CHECK(rows.size() == 3);
    for (std::size_t j = 0; j < rep.coefficient_names.size(); ++j) {
      const auto& [b, se] = rows.at(rep.coefficient_names[j]);
      CHECK(b == doctest::Approx(rep.beta(static_cast<Eigen::Index>(j))).epsilon(1e-12));
      CHECK(se == doctest::Approx(rep.se(static_cast<Eigen::Index>(j))).epsilon(1e-12));
    }
  }
  // Raking on the phase-1 data sharpens the phase-2 coefficient.
  CHECK(est.at("gr").at("X").second < est.at("ipw").at("X").second);
  CHECK(est.at("stab_rake").at("X").second < est.at("ipw").at("X").second);
}

TEST_CASE("a failing estimator does not abort the others") {
  TempDir dir("partial");
  const auto cfg = default_config(ScenarioId::tp_homoscedastic);
  const auto full = generate_population(cfg, 0);
  const auto design = draw_phase2(full, cfg, 0);
  write_text_file(dir.file("data.csv"), export_analysis_csv(full, design));
  write_text_file(dir.file("meta.json"), kMeta);
  const auto r = run({"analyze", dir.file("data.csv"), "--meta", dir.file("meta.json"), "--estimators",
                      "ipw,mle_cc", "--out", dir.file("out")});
  CHECK(r.code == cli::kOk);
  CHECK(r.err.find("mle_cc") != std::string::npos);
  const std::string csv = read_text_file(dir.file("out/estimates.csv"));
  CHECK(csv.find("mle_cc,,,,,,\"error") != std::string::npos);
  CHECK(read_estimates(dir.file("out/estimates.csv")).at("ipw").size() == 3);
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

TEST_CASE("simulate with one replicate marks empSE as undefined") {
  TempDir dir("one");
  write_text_file(dir.file("s.json"), R"({"scenario_id": "tp_homoscedastic", "replicates": 1})");
  const auto r = run({"simulate", dir.file("s.json"), "--out", dir.file("out"), "--estimators", "ipw,gr"});
  REQUIRE(r.code == cli::kOk);
  const CsvTable t = read_csv_file(dir.file("out/summary.csv"));
  const auto col = [&](const std::string& name) {
    return static_cast<std::size_t>(std::find(t.header.begin(), t.header.end(), name) - t.header.begin());
  };
  REQUIRE(t.rows.size() == 6);
  for (const auto& row : t.rows) {
    CHECK(row[col("emp_se")] == "NA");
    CHECK_NOTHROW(std::stod(row[col("bias")]));
  }
  CHECK(fs::exists(dir.file("out/summary.md")));
  CHECK(config_from_json(read_text_file(dir.file("out/config.json"))).replicates == 1);
}

TEST_CASE("simulate output does not depend on the number of workers") {
  TempDir dir("par");
  write_text_file(dir.file("s.json"), R"({"scenario_id": "tp_homoscedastic", "replicates": 12})");
  const auto a = run({"simulate", dir.file("s.json"), "--out", dir.file("a"), "--parallel", "1"});
  const auto b = run({"simulate", dir.file("s.json"), "--out", dir.file("b"), "--parallel", "4"});
  REQUIRE(a.code == cli::kOk);
  REQUIRE(b.code == cli::kOk);
  CHECK(read_text_file(dir.file("a/summary.csv")) == read_text_file(dir.file("b/summary.csv")));
}

TEST_CASE("a case-control grid has the layout of the published table") {
  TempDir dir("grid");
  write_text_file(dir.file("s.json"),
                  R"({"scenario_id": "cc_normal", "replicates": 20, "grid": {"beta_x": [0, 0.5, 1, 1.5]}})");
  const auto r = run({"simulate", dir.file("s.json"), "--out", dir.file("out"), "--parallel", "2"});
  REQUIRE(r.code == cli::kOk);
  const std::string md = read_text_file(dir.file("out/summary.md"));
  std::istringstream lines(md);
  std::string line;
  std::vector<std::string> table;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.front() == '|') table.push_back(line);
  }
  // Header, separator, then two coefficients for each of four grid values.
  REQUIRE(table.size() == 10);
  CHECK(table[0].find("mean n") != std::string::npos);
  CHECK(table[0].find("MLE empSE") != std::string::npos);
  CHECK(table[0].find("IPW RMSE") != std::string::npos);
  for (const std::string v : {"| 0 ", "| 0.5 ", "| 1 ", "| 1.5 "}) {
    int hits = 0;
    for (std::size_t k = 2; k < table.size(); ++k) hits += table[k].rfind(v, 0) == 0;
    CHECK(hits == 2);
  }
}

// ---------------------------------------------------------------------------
// Usage and replicate-paper
// ---------------------------------------------------------------------------

TEST_CASE("usage errors exit with code 2") {
  TempDir dir("usage");
  write_text_file(dir.file("bad.json"), "{not json");
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"analyze", dir.file("missing.csv"), "--meta", dir.file("missing.json")}).code == cli::kUsageError);
  CHECK(run({"simulate", dir.file("bad.json")}).code == cli::kUsageError);
  CHECK(run({"simulate", dir.file("bad.json"), "--parallel", "0"}).code == cli::kUsageError);
  CHECK(run({"replicate-paper", "T9"}).code == cli::kUsageError);
  CHECK(run({"replicate-paper", "1", "--distance", "cosine"}).code == cli::kUsageError);
  write_text_file(dir.file("s.json"), R"({"scenario_id": "tp_homoscedastic", "replicates": 2})");
  CHECK(run({"simulate", dir.file("s.json"), "--estimators", "lasso"}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("replicate-paper writes the comparison and reports the checks in its exit code") {
  TempDir dir("rep");
  const auto r = run({"replicate-paper", "1", "--replicates", "40", "--out", dir.path.string()});
  CHECK((r.code == cli::kOk || r.code == cli::kCheckFailed));
  const bool any_fail = r.out.find("FAIL  ") != std::string::npos;
  CHECK(any_fail == (r.code == cli::kCheckFailed));
  const bool any_pass = r.out.find("PASS  ") != std::string::npos;
  CHECK((any_pass || any_fail));
  CHECK(fs::exists(dir.file("replicate_table_1.md")));
  const CsvTable t = read_csv_file(dir.file("replicate_table_1.csv"));
  CHECK_FALSE(t.rows.empty());
  CHECK(t.header.back() == "ratio");
}
