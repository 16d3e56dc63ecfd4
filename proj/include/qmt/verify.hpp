#pragma once
// Exact axiom suites for presentations: Hopf *-algebra checks, morphism checks,
// and seeded mutation scans.  A check passes only if it holds identically.

#include <string>
#include <vector>

#include "qmt/linalg.hpp"
#include "qmt/presentation.hpp"
#include "qmt/report.hpp"

namespace qmt {

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  double residual = 0.0;  // numeric norm of the first defect, 0 when exact
  long fail_count = 0;
  Json witness;           // first failing tuple, null when pass
};

struct AxiomReport {
  std::string subject;
  std::vector<AxiomCheck> checks;
  int s_squared_order = 0;  // smallest k <= 16 with S^(2k) = id, else 0
  bool all_pass() const;
  double max_residual() const;
  Json to_json() const;
};

AxiomReport verify_hopf(const Presentation& P, bool with_star = true);

struct MorphismOptions {
  bool algebra = true;
  bool coalgebra = true;
  bool counit = true;
  bool antipode = true;
  bool star = true;
  bool unit = true;
  bool invertible = false;
};

// f maps A to B, columns over the basis of A.
AxiomReport verify_morphism(const std::string& name, const Presentation& A,
                            const Presentation& B, const Mat<Cyclo>& f,
                            const MorphismOptions& opt);

struct MutationOutcome {
  int mult_i = 0, mult_j = 0, term = 0;
  std::string label_i, label_j;
  bool detected = false;
  std::string first_failed_axiom;
};

struct MutationReport {
  unsigned long seed = 0;
  std::vector<MutationOutcome> outcomes;
  bool all_detected() const;
  Json to_json() const;
};

// Sign-flips `count` distinct nonzero product constants one at a time.
MutationReport mutation_scan(const Presentation& P, int count, unsigned long seed);

}  // namespace qmt
