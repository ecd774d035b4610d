// exlab command line: runs scenario simulations and the verification
// suites, writing trajectory/world-tube CSV and pass/fail reports.
//
//   exlab simulate --scenario <path> --out <dir>
//   exlab verify --suite <lie|pictures|uncertainty|prob|lln|all> --seed <u64>
//                [--out <dir>]
//
// Exit codes: 0 all checks pass, 1 check failure, 2 usage/config error.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include "exlab/scenario.hpp"
#include "exlab/verify.hpp"

namespace {

int do_simulate(const std::string& scenario_path, const std::string& out_dir) {
  const exlab::Scenario sc = exlab::load_scenario(scenario_path);
  const exlab::SimulateResult result = exlab::run_simulate(sc, out_dir);
  std::cout << "wrote " << result.trajectory_path << "\n";
  if (!result.worldtube_path.empty())
    std::cout << "wrote " << result.worldtube_path << "\n";
  std::cout << "wrote " << result.manifest_path << "\n";
  return 0;
}

int do_verify(const std::string& suite, std::uint64_t seed,
              const std::string& out_dir) {
  const exlab::VerificationReport report = exlab::run_verify(suite, seed);
  const std::string text = exlab::report_to_text(report);
  std::cout << text;
  if (!out_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    exlab::write_text_file((fs::path(out_dir) / "report.json").string(),
                           exlab::report_to_json(report).dump(2) + "\n");
    exlab::write_text_file((fs::path(out_dir) / "report.txt").string(), text);
    if (suite == "lln" || suite == "all")
      exlab::write_text_file(
          (fs::path(out_dir) / "frequency.json").string(),
          exlab::frequency_experiments_json(seed).dump(2) + "\n");
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional expectation laboratory"};
  app.require_subcommand(1);

  std::string scenario_path, sim_out;
  CLI::App* sim = app.add_subcommand("simulate", "run a scenario and emit CSV");
  sim->add_option("--scenario", scenario_path, "scenario JSON path")->required();
  sim->add_option("--out", sim_out, "output directory")->required();

  std::string suite, verify_out;
  std::uint64_t seed = 0;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "lie|pictures|uncertainty|prob|lln|all")
      ->required();
  verify->add_option("--seed", seed, "random seed")->required();
  verify->add_option("--out", verify_out, "directory for report.json/report.txt");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return 2;     // usage errors exit with 2
  }

  try {
    if (sim->parsed()) return do_simulate(scenario_path, sim_out);
    return do_verify(suite, seed, verify_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
