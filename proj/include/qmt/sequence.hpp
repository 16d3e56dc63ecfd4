#pragma once
// Window-level exact sequence checks: inclusion and quotient maps around the
// compact presentations, composites on the invariant sub-basis, and
// constructive degree-bounded kernel decompositions.

#include <string>

#include "qmt/report.hpp"
#include "qmt/verify.hpp"
#include "qmt/window.hpp"

namespace qmt {

// q = 1 window -> q = zeta_N window -> compact presentation.  Verifies both
// maps on all window basis elements, the counit-unit composite on the
// two-sector monomial sub-basis, the failure of that composite off it, and a
// kernel decomposition whose every element stays inside degree D.
AxiomReport dt_sequence_report(int N, long D = 4);

// Rank-3 cyclic family: commutative closure of the lattice sub-basis, its
// coalgebra leak witness, the grouplike invariant monomial, the quotient onto
// the finite fibration, and the kernel ladder along the lattice basis.
AxiomReport z3_sequence_report(int N, long D = 4);

// Named morphisms for the CLI: "i-dt", "j-dt", "j-z3" take the window
// parameter N; "fib-kp3" and "wsub-w3" are presentation isomorphisms at N = 3.
AxiomReport named_morphism(const std::string& which, int N);

}  // namespace qmt
