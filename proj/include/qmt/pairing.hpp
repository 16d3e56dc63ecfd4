#pragma once
// Bilinear pairings between a functional-side and a base-side presentation,
// the exact duality identity suite, character and grouplike enumeration, and
// the exact self-duality solver at N = 2.

#include <string>
#include <vector>

#include "qmt/linalg.hpp"
#include "qmt/presentation.hpp"
#include "qmt/report.hpp"
#include "qmt/verify.hpp"

namespace qmt {

struct Pairing {
  Mat<Cyclo> M;  // M.at(a, x) = <f_a, e_x>; rows functional side, cols base side
};

// Diagonal pairing between the structural dual and the compact presentation at
// the same N: 1 on the plus sector, r^{-ab} on the minus sector.
Pairing canonical_kpw_pairing(int N);

// Kronecker pairing between the function-type subalgebra and the fibration
// built from the same (G, theta, L); both use the same basis layout.
Pairing kronecker_pairing(int dim);

// Duality identity suite, full basis scans, all exact:
//   <ab,x> = <a x b, Delta x>      <Delta a, x x y> = <a, xy>
//   <1,x> = eps(x)                 eps(a) = <a,1>
//   <Sa,x> = <a,Sx>                <a*,x> = conj <a,(Sx)*>
// plus exact full rank of the pairing matrix.
AxiomReport verify_pairing(const Presentation& F, const Presentation& A, const Pairing& pr);

// CLI entry: rule in {canonical-kpw, kronecker, group-function}.
AxiomReport named_pairing_report(const std::string& rule, int N);

// Exact scalar-valued algebra characters, enumerated from the commutative
// subalgebra support analysis and validated by full multiplicative scans.
std::vector<Vec> kp_characters(int N);  // values on the compact basis, N^2 many
std::vector<Vec> w_characters(int N);   // values on the dual basis, 2N many

// Grouplike enumeration through the canonical pairing: characters of one side
// solve to grouplikes of the other.  Verifies grouplikeness, distinctness and
// closure exactly, and that the two group orders are 2N and N^2.
AxiomReport grouplike_report(int N);

struct SelfDuality {
  int N = 0;
  bool found = false;
  std::vector<int> perm;  // grouplike correspondence, index into the dual list
  std::string shape;      // "diagonal" or "antidiagonal"
  Cyclo c;                // comatrix scale
  Mat<Cyclo> f;           // found isomorphism, dual-side coords over compact basis
  AxiomReport checks;     // verification of the found map
  std::string reason;     // explanation when found = false
  Json to_json() const;
};

// N = 2: exact finite search over grouplike correspondences, comatrix shapes
// and scale roots; every candidate is checked exactly.  N = 3, 4: grouplike
// group orders differ, so no isomorphism exists and found = false.
SelfDuality self_duality_search(int N);

}  // namespace qmt
