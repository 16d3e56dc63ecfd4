#pragma once
// Semisimple block structure: the center is computed exactly over the
// cyclotomic field; block sizes are identified numerically from random central
// elements and reported with residuals and cross-seed stability.

#include <vector>

#include "qmt/linalg.hpp"
#include "qmt/presentation.hpp"
#include "qmt/report.hpp"

namespace qmt {

// Columns span the center; exact.  Commutation is imposed against the stored
// generator indices (a generating set), or all basis elements if none.
Mat<Cyclo> center_basis(const Presentation& P);

struct DecompositionReport {
  int dim = 0;
  int center_dim = 0;       // exact
  std::vector<int> blocks;  // matrix sizes n_i, ascending; numeric (tol 1e-8)
  double residual = 0.0;    // worst idempotent defect across the run
  unsigned long seed = 0;
  bool seeds_agree = false;  // same multiset from three consecutive seeds
  bool consistent = false;   // sum n_i^2 == dim and block count == center_dim
  Json to_json() const;
};

DecompositionReport decompose(const Presentation& P, unsigned long seed = 1);

// Restricts to the two-sided ideal spanned by a basis subset (products of the
// subset with anything must stay inside it).  The ideal unit is solved for and
// verified to be a central idempotent; comultiplication data is not carried
// over since the sector is only an algebra.
Presentation sector_split(const Presentation& P, const std::vector<int>& subset);

}  // namespace qmt
