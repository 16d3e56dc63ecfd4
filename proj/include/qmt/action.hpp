#pragma once
// The dual acts on the compact presentation through the canonical pairing:
// f . a = a_(1) <f, a_(2)>.  Module and module-algebra scans, the distinguished
// shift and exchange elements with their coproduct identities, and commutators
// of fibration generators against the cocycle antisymmetrization.

#include <string>

#include "qmt/pairing.hpp"
#include "qmt/report.hpp"
#include "qmt/verify.hpp"

namespace qmt {

// Module axioms, module-algebra compatibility, unit action, and the exchange
// table on the degree-one generators.  Exact full scans.
AxiomReport action_report(int N);

// Identities for sigma = sum w-^{nm}, e1 = sum n w+^{nm}, e2 = sum m w+^{nm}:
// sigma^2 = 1, [e1, e2] = 0, e1 sigma = sigma e2, translation of the plus
// basis, grouplike q-power, the primitive defect of e1, and the coproduct
// twist Delta sigma = (sigma x sigma) X.  The twist check is expected to fail
// at N = 2 on four slots with opposite sign; it is reported, not masked.
AxiomReport lie_report(int N);

// K(m, n) = (U^{e_m})* (U^{e_n})* U^{e_m} U^{e_n} inside a fibration equals
// sum_g e^{2 pi i (theta_g(m,n) - theta_g(n,m))} U^[0]_g.
// family: "z3" (rank 3 cyclic), "flip" (rank 2), "trivial" (zero cocycle).
AxiomReport commutator_report(const std::string& family, int N);

}  // namespace qmt
