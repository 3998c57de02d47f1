#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace twophase::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;
constexpr int kScenarioFailed = 3;

struct AnalyzeArgs {
  std::string data_path;
  std::string metadata_path;
  std::string out_dir = ".";
  std::string estimators = "ipw,gr,stab_z,stab_rake";
  std::string distance = "raking";
  std::string format = "csv";
  std::uint64_t seed = 1;
};

struct SimulateArgs {
  std::string scenario_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  unsigned parallel = 1;
  std::optional<std::string> estimators;
  std::optional<std::string> distance;
  std::optional<std::size_t> replicates;
  std::string format = "md";
};

struct ReplicateArgs {
  std::string table;
  std::string out_dir = ".";
  std::uint64_t seed = 20240601;
  unsigned parallel = 1;
  std::size_t replicates = 1000;
  bool full_grid = false;  // every row of the table, not only the checked ones
  std::string format = "md";
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err);
int cmd_replicate_paper(const ReplicateArgs& args, std::ostream& out, std::ostream& err);

// argv-style entry point used by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twophase::cli
