#pragma once
// Acceptance suite: eleven numbered criteria covering cocycle solution spaces,
// the Hopf axiom suite, Wedderburn block multisets, center dimensions, the
// duality pairing with the A8 self-duality search, multiplier window
// identities, exact sequences, the representation window, the Lie/twist layer,
// the q = 1 degeneration, and mutation sensitivity.  Each criterion produces
// one pass/fail line plus a structured detail report; nothing is asserted
// beyond what the shared verification layers compute.

#include <string>

#include "qmt/report.hpp"

namespace qmt {

inline constexpr int kCriterionCount = 11;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string summary;  // single line, no newlines
  Json detail;
  std::string line() const;  // "criterion <id>: PASS|FAIL - <summary>"
  Json to_json() const;
};

// Runs one criterion (1..11); throws std::invalid_argument otherwise.
CriterionResult run_criterion(int id);

// Runs all criteria in order and returns the combined report.  When all_pass
// is non-null it receives the conjunction of the individual results.
Json acceptance_report(bool* all_pass = nullptr);

}  // namespace qmt
