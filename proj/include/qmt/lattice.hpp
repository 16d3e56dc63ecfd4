#pragma once
// Full-rank sublattices L of Z^n given by integer generator matrices (columns),
// with Smith normal form U A V = diag(s) for quotient enumeration Z^n / L.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "qmt/permgroup.hpp"

namespace qmt {

using ZMat = std::vector<std::vector<mpz_class>>;
using ZVec = std::vector<mpz_class>;

struct SmithResult {
  ZMat U, V;          // unimodular
  std::vector<mpz_class> s;  // diagonal, s[i] | s[i+1], all > 0
};

SmithResult smith_normal_form(ZMat A);  // square nonsingular input

class Lattice {
 public:
  // Columns of A generate L; throws on non-square or singular input.
  static Lattice from_columns(const ZMat& A);
  static Lattice scaled(int n, long N);   // L = N Z^n
  static Lattice full(int n);             // L = Z^n (trivial quotient)

  int rank() const { return n_; }
  const ZMat& columns() const { return A_; }
  const std::vector<mpz_class>& box() const { return s_; }  // invariant factors
  const mpz_class& quotient_order() const { return order_; }

  bool contains(const ZVec& x) const;
  ZVec digits(const ZVec& x) const;       // mixed-radix coordinates in prod [0, s_i)
  ZVec representative(const ZVec& x) const;  // canonical coset representative
  long flat_index(const ZVec& x) const;   // index of the coset of x
  ZVec rep_of_flat(long idx) const;       // representative of the idx-th coset

  // Lattice basis in representative coordinates: column k of Uinv scaled by s_k.
  ZVec basis_vector(int k) const;
  // Coefficients c with x = sum c_k basis_vector(k); requires contains(x).
  ZVec basis_coefficients(const ZVec& x) const;

  bool invariant_under(const Perm& p) const;  // p permutes coordinates of L into L

 private:
  int n_ = 0;
  ZMat A_, U_, Uinv_;
  std::vector<mpz_class> s_;
  mpz_class order_ = 1;
};

std::string zvec_str(const ZVec& v);  // "[a,b,...]"

}  // namespace qmt
