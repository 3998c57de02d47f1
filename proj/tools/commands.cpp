#include "commands.hpp"

#include <filesystem>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twophase/errors.hpp"
#include "twophase/estimators.hpp"
#include "twophase/io.hpp"
#include "twophase/replication.hpp"
#include "twophase/report.hpp"
#include "twophase/simlab.hpp"

namespace twophase::cli {

namespace fs = std::filesystem;

namespace {

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!fs::is_directory(dir)) throw DomainError("cannot create output directory '" + dir + "'");
}

std::string join(const std::string& dir, const std::string& file) { return (fs::path(dir) / file).string(); }

// Applies a grid key to a config; "beta" sets both coefficients.
void set_parameter(ScenarioConfig& c, const std::string& key, double v) {
  if (key == "beta") {
    c.beta_x = c.beta_z = v;
  } else if (key == "beta_x") {
    c.beta_x = v;
  } else if (key == "beta_z") {
    c.beta_z = v;
  } else if (key == "beta0") {
    c.beta0 = v;
  } else if (key == "sigma2") {
    c.sigma2 = v;
  } else if (key == "delta") {
    c.delta = v;
  } else {
    throw DomainError("unknown grid parameter '" + key + "'");
  }
}

}  // namespace

// -------------------------------------------------------------------------
// analyze
// -------------------------------------------------------------------------

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  const TableFormat format = args.format == "md" ? TableFormat::markdown : TableFormat::text;
  const AnalysisMetadata meta = parse_metadata(read_text_file(args.metadata_path));
  const AnalysisData data = load_analysis(read_csv_file(args.data_path), meta);
  const std::vector<EstimatorKind> kinds = parse_estimator_list(args.estimators);

  EstimatorOptions opts;
  opts.distance = parse_distance(args.distance);
  opts.imputation_columns = meta.imputation_columns;
  opts.raking_coefficients = meta.raking_coefficients;
  EstimatorPipeline pipeline(data.frame, data.design, data.spec, opts);

  std::vector<EstimatorResult> results;
  for (auto k : kinds) {
    EstimatorResult r;
    r.kind = k;
    try {
      r.report = pipeline.run(k);
      r.ok = true;
    } catch (const std::exception& e) {
      r.error = e.what();
      err << "warning: " << to_string(k) << " failed: " << e.what() << '\n';
    }
    results.push_back(std::move(r));
  }

  ensure_dir(args.out_dir);
  write_text_file(join(args.out_dir, "estimates.csv"), estimates_csv(results));
  const std::string table = estimates_table(results, data.spec.family, format);
  write_text_file(join(args.out_dir, format == TableFormat::markdown ? "estimates.md" : "estimates.txt"), table);
  out << "N = " << data.frame.n_rows() << ", phase-2 n = " << data.design.n_included() << ", strata = "
      << data.design.strata().size() << "\n\n"
      << table;
  return kOk;
}

// -------------------------------------------------------------------------
// simulate
// -------------------------------------------------------------------------

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
  const std::string text = read_text_file(args.scenario_path);
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("scenario file: ") + e.what(), 0);
  }
  nlohmann::ordered_json grid = nlohmann::ordered_json::object();
  if (j.contains("grid")) {
    grid = j.at("grid");
    j.erase("grid");
  }
  ScenarioConfig base = config_from_json(j.dump());
  if (args.seed) base.base_seed = *args.seed;
  if (args.replicates) base.replicates = *args.replicates;
  if (args.estimators) base.estimators = parse_estimator_list(*args.estimators);
  if (args.distance) base.estimator_options.distance = parse_distance(*args.distance);

  // Cartesian product of grid values, first key varying slowest.
  std::vector<std::vector<std::pair<std::string, double>>> points{{}};
  for (const auto& [key, values] : grid.items()) {
    std::vector<std::vector<std::pair<std::string, double>>> next;
    for (const auto& p : points) {
      for (const auto& v : values) {
        auto q = p;
        q.emplace_back(key, v.get<double>());
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }

  RunOptions run;
  run.parallel = args.parallel;
  std::vector<GridResult> results;
  bool failed = false;
  for (const auto& p : points) {
    ScenarioConfig c = base;
    for (const auto& [k, v] : p) set_parameter(c, k, v);
    validate(c);
    GridResult g{p, run_scenario(c, run)};
    if (g.summary.failed) {
      failed = true;
      err << "scenario failure threshold exceeded at";
      for (const auto& [k, v] : p) err << ' ' << k << '=' << v;
      err << '\n';
    }
    for (const auto& line : g.summary.failure_log) err << "  " << line << '\n';
    results.push_back(std::move(g));
  }

  ensure_dir(args.out_dir);
  write_text_file(join(args.out_dir, "summary.csv"), summary_csv(results));
  const std::string md = summary_markdown(results);
  write_text_file(join(args.out_dir, "summary.md"), md);
  write_text_file(join(args.out_dir, "config.json"), config_to_json(base));
  out << md;
  return failed ? kScenarioFailed : kOk;
}

// -------------------------------------------------------------------------
// replicate-paper
// -------------------------------------------------------------------------

int cmd_replicate_paper(const ReplicateArgs& args, std::ostream& out, std::ostream& err) {
  const std::string& table = args.table;
  table_scenario(table);  // validates the id
  std::vector<GridPoint> points = args.full_grid ? table_grid(table) : check_points(table);
  if (points.empty()) points = table_grid(table);
  for (const auto& p : check_points(table)) {
    if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
  }

  RunOptions run;
  run.parallel = args.parallel;
  std::vector<GridResult> results;
  bool failed = false;
  for (const auto& p : points) {
    GridResult g{grid_parameters(table, p), run_scenario(grid_config(p, args.replicates, args.seed), run)};
    if (g.summary.failed) {
      failed = true;
      err << "scenario failure threshold exceeded for table " << table << '\n';
    }
    results.push_back(std::move(g));
  }
  const SummaryLookup lookup = [&](const GridPoint& p) -> const SimulationSummary& {
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (points[k] == p) return results[k].summary;
    }
    throw DomainError("grid point was not run");
  };

  // Side-by-side comparison of every published cell that was run.
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
  for (const auto& [name, v] : grid_parameters(table, points.front())) header.push_back(name);
  header.insert(header.end(), {"Coefficient", "Estimator", "paper empSE", "reproduced", "ratio"});
  rows.push_back(header);
  std::ostringstream csv;
  csv << "table";
  for (std::size_t k = 0; k + 5 < header.size(); ++k) csv << ',' << header[k];
  csv << ",coefficient,estimator,paper_emp_se,reproduced_emp_se,ratio\n";
  for (const auto& c : compare_with_reference(table, points, lookup)) {
    const GridPoint p{parse_scenario(c.reference.scenario), c.reference.beta_x, c.reference.beta_z,
                      c.reference.sigma2, c.reference.delta};
    std::vector<std::string> row;
    csv << table;
    for (const auto& [name, v] : grid_parameters(table, p)) {
      row.push_back(format_full(v));
      csv << ',' << format_full(v);
    }
    const std::string est = display_name(c.reference.estimator);
    row.insert(row.end(), {c.reference.coefficient, est, fixed(c.reference.emp_se),
                           c.reproduced ? fixed(*c.reproduced) : "NA", c.ratio ? fixed(*c.ratio, 2) : "NA"});
    csv << ',' << c.reference.coefficient << ',' << est << ',' << format_full(c.reference.emp_se) << ','
        << (c.reproduced ? format_full(*c.reproduced) : "NA") << ',' << (c.ratio ? format_full(*c.ratio) : "NA")
        << '\n';
    rows.push_back(row);
  }
  const TableFormat format = args.format == "md" ? TableFormat::markdown : TableFormat::text;
  std::ostringstream report;
  report << "Table " << table << " (" << table_scenario(table) << "), " << args.replicates
         << " replicates, seed " << args.seed << "\n\n"
         << render_table(rows, format) << "\nTolerance checks\n\n";
  bool all_pass = true;
  for (const auto& c : table_checks(table, lookup)) {
    all_pass = all_pass && c.pass;
    report << (c.pass ? "PASS  " : "FAIL  ") << c.name << " = " << fixed(c.value, 4) << "  (" << c.rule << ")\n";
  }
  ensure_dir(args.out_dir);
  const std::string stem = "replicate_table_" + table;
  write_text_file(join(args.out_dir, stem + (format == TableFormat::markdown ? ".md" : ".txt")), report.str());
  write_text_file(join(args.out_dir, stem + ".csv"), csv.str());
  write_text_file(join(args.out_dir, stem + "_summary.csv"), summary_csv(results));
  out << report.str();
  if (failed) return kScenarioFailed;
  return all_pass ? kOk : kCheckFailed;
}

// -------------------------------------------------------------------------
// Entry point
// -------------------------------------------------------------------------

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-phase regression estimators: IPW, raking, stabilised weights"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Estimate a regression model on two-phase data");
  analyze->add_option("data", an.data_path, "CSV data file")->required()->check(CLI::ExistingFile);
  analyze->add_option("--meta", an.metadata_path, "JSON metadata describing the columns")
      ->required()
      ->check(CLI::ExistingFile);
  analyze->add_option("--out", an.out_dir, "Output directory");
  analyze->add_option("--estimators", an.estimators, "Comma list of ipw,gr,stab_z,stab_xz,stab_rake,mle_cc");
  analyze->add_option("--distance", an.distance, "Calibration distance")->check(CLI::IsMember({"raking", "greg"}));
  analyze->add_option("--format", an.format, "Table format")->check(CLI::IsMember({"csv", "md"}));
  analyze->add_option("--seed", an.seed, "Seed (analysis is deterministic; recorded only)");
  unsigned analyze_parallel = 1;
  analyze->add_option("--parallel", analyze_parallel, "Worker threads (unused by analyze)");

  SimulateArgs sim;
  std::uint64_t sim_seed = 0;
  std::string sim_estimators, sim_distance;
  std::size_t sim_replicates = 0;
  auto* simulate = app.add_subcommand("simulate", "Run a Monte Carlo scenario");
  simulate->add_option("scenario", sim.scenario_path, "JSON scenario config")->required()->check(CLI::ExistingFile);
  simulate->add_option("--out", sim.out_dir, "Output directory");
  auto* sim_seed_opt = simulate->add_option("--seed", sim_seed, "Base seed (overrides the config)");
  simulate->add_option("--parallel", sim.parallel, "Worker threads")->check(CLI::Range(1u, 256u));
  auto* sim_est_opt = simulate->add_option("--estimators", sim_estimators, "Comma list of estimators");
  auto* sim_dist_opt = simulate->add_option("--distance", sim_distance, "Calibration distance")
                           ->check(CLI::IsMember({"raking", "greg"}));
  auto* sim_rep_opt = simulate->add_option("--replicates", sim_replicates, "Replicates (overrides the config)")
                          ->check(CLI::PositiveNumber);
  simulate->add_option("--format", sim.format, "Table format")->check(CLI::IsMember({"csv", "md"}));

  ReplicateArgs rep;
  auto* replicate = app.add_subcommand("replicate-paper", "Reproduce a published simulation table");
  replicate->add_option("table", rep.table, "Table id: 1, 2, 3, S1 ... S6")->required();
  replicate->add_option("--out", rep.out_dir, "Output directory");
  replicate->add_option("--seed", rep.seed, "Base seed");
  replicate->add_option("--parallel", rep.parallel, "Worker threads")->check(CLI::Range(1u, 256u));
  replicate->add_option("--replicates", rep.replicates, "Replicates per grid point")->check(CLI::PositiveNumber);
  replicate->add_flag("--full", rep.full_grid, "Run every row of the table");
  replicate->add_option("--format", rep.format, "Table format")->check(CLI::IsMember({"csv", "md"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  try {
    if (*analyze) return cmd_analyze(an, out, err);
    if (*simulate) {
      if (*sim_seed_opt) sim.seed = sim_seed;
      if (*sim_est_opt) sim.estimators = sim_estimators;
      if (*sim_dist_opt) sim.distance = sim_distance;
      if (*sim_rep_opt) sim.replicates = sim_replicates;
      return cmd_simulate(sim, out, err);
    }
    if (*replicate) return cmd_replicate_paper(rep, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace twophase::cli
