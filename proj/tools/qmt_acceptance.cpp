// Acceptance runner: one pass/fail line per criterion.  With --criterion k it
// runs a single criterion; without it the whole suite.  --json adds the full
// detail report on stdout.  Exit 0 iff every requested criterion passes.
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "qmt/acceptance.hpp"
#include "qmt/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria runner"};
  int criterion = 0;
  bool json = false;
  app.add_option("--criterion", criterion, "run a single criterion (1..11)")
      ->check(CLI::Range(1, qmt::kCriterionCount));
  app.add_flag("--json", json, "also print the detail report as JSON");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qmt::kExitConfigError;
  }

  try {
    if (criterion > 0) {
      qmt::CriterionResult r = qmt::run_criterion(criterion);
      std::cout << r.line() << "\n";
      if (json) std::cout << r.to_json().dump(2) << "\n";
      return r.pass ? qmt::kExitOk : qmt::kExitCheckFailed;
    }
    bool all = true;
    qmt::Json full = qmt::Json::array();
    for (int id = 1; id <= qmt::kCriterionCount; ++id) {
      qmt::CriterionResult r = qmt::run_criterion(id);
      std::cout << r.line() << "\n";
      all = all && r.pass;
      if (json) full.push_back(r.to_json());
    }
    if (json) std::cout << full.dump(2) << "\n";
    return all ? qmt::kExitOk : qmt::kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return qmt::kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qmt::kExitConfigError;
  }
}
