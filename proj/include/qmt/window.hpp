#pragma once
// Degree-truncated models of the infinite families.  Window arithmetic is exact
// on kept terms; any product leaving the window sets a sticky overflow flag and
// no check downstream of an overflow counts as a pass.

#include <map>
#include <utility>
#include <vector>

#include "qmt/cocycle.hpp"
#include "qmt/permgroup.hpp"
#include "qmt/presentation.hpp"
#include "qmt/report.hpp"
#include "qmt/verify.hpp"

namespace qmt {

// Sector-split torus window: basis (s, a, b) with s in {+,-} and integer
// exponents; the compact presentations arise by reducing exponents mod N.
struct DTKey {
  int s = 0;
  long a = 0, b = 0;
  auto operator<=>(const DTKey&) const = default;
};

struct DTElem {
  std::map<DTKey, Cyclo> t;
  bool overflow = false;
};

struct DTTensor {
  std::map<std::pair<DTKey, DTKey>, Cyclo> t;
  bool overflow = false;
};

class DTWindow {
 public:
  // N = 1 gives the q = 1 degeneration; D = 0 means unbounded.
  DTWindow(int N, long D);

  int N() const { return N_; }
  long D() const { return D_; }
  const Cyclo& q() const { return q_; }
  bool in_window(long a, long b) const;

  DTElem basis(int s, long a, long b) const;
  DTElem monomial(long a, long b) const;  // U^a V^b = sum over both sectors
  DTElem unit() const;
  DTElem mul(const DTElem& x, const DTElem& y) const;
  DTTensor comult(const DTElem& x) const;
  Cyclo counit(const DTElem& x) const;
  DTElem antipode(const DTElem& x) const;
  DTElem star(const DTElem& x) const;

 private:
  int N_;
  long D_;
  Cyclo q_;
};

bool dt_elem_eq(const DTElem& x, const DTElem& y);
DTElem dt_add(const DTElem& x, const DTElem& y);
DTElem dt_sub(const DTElem& x, const DTElem& y);
Json dt_elem_json(const DTElem& x);

// Delta-product family on a group with multiplier coproduct.  The coproduct is
// an infinite sum, so only its products against a fixed leg are exposed.
using CKey = std::pair<int, std::vector<long>>;  // (group index, exponent)

struct CElem {
  std::map<CKey, Cyclo> t;
  bool overflow = false;
};

struct CTensor {
  std::map<std::pair<CKey, CKey>, Cyclo> t;
  bool overflow = false;
};

struct CTriple {
  std::map<std::tuple<CKey, CKey, CKey>, Cyclo> t;
  bool overflow = false;
};

class CWindow {
 public:
  CWindow(PermGroup G, CocycleFamily theta, long D);

  const PermGroup& group() const { return G_; }
  long D() const { return D_; }
  bool in_window(const std::vector<long>& v) const;
  Cyclo alpha(int g, const std::vector<long>& i, const std::vector<long>& j) const;

  CElem basis(int g, std::vector<long> i) const;
  CElem mul(const CElem& x, const CElem& y) const;  // C^i_g C^j_h = d_{i,h(j)} C^j_{gh}
  Cyclo counit(const CElem& x) const;
  CElem antipode(const CElem& x) const;
  CElem star(const CElem& x) const;

  // Closed forms for the coproduct against one leg (single basis element each).
  CTensor delta_right(const CKey& a, const CKey& c) const;  // Delta(C_a)(1 x C_c)
  CTensor delta_left(const CKey& c, const CKey& a) const;   // (C_c x 1) Delta(C_a)
  // Brute counterparts that walk the window box; used to cross-check the above.
  CTensor delta_right_brute(const CKey& a, const CKey& c) const;
  CTensor delta_left_brute(const CKey& c, const CKey& a) const;

  // Associativity of the multiplier coproduct on a triple (a, b, c):
  // (a x 1 x 1)(Delta x id)(Delta(b)(1 x c)) == (id x Delta)((a x 1)Delta(b))(1 x 1 x c).
  bool coassoc_triple(const CKey& a, const CKey& b, const CKey& c, bool* overflow) const;

 private:
  PermGroup G_;
  CocycleFamily theta_;
  long D_;
};

// Branch choice identifying the rank-2 flip instance with the sector-split
// window duals: t = 1/(2N) for even N, (N+1)/(2N) for odd N.
mpq_class dual_c_parameter(int N);
CWindow dual_c_window(int N, long D);

// Group-product family with finite coproduct; D = 0 means unbounded.
using UKey = std::pair<int, std::vector<long>>;

struct UElem {
  std::map<UKey, Cyclo> t;
  bool overflow = false;
};

struct UTensor {
  std::map<std::pair<UKey, UKey>, Cyclo> t;
  bool overflow = false;
};

class UWindow {
 public:
  UWindow(PermGroup G, CocycleFamily theta, long D);

  const PermGroup& group() const { return G_; }
  const CocycleFamily& theta() const { return theta_; }
  bool in_window(const std::vector<long>& v) const;

  UElem basis(int g, std::vector<long> j) const;
  UElem lattice_monomial(const std::vector<long>& v) const;  // sum_g U^v_g
  UElem unit() const;
  UElem mul(const UElem& x, const UElem& y) const;  // U^i_g U^j_h = d_{gh} phase U^{i+j}_g
  UTensor comult(const UElem& x) const;
  Cyclo counit(const UElem& x) const;
  UElem antipode(const UElem& x) const;
  UElem star(const UElem& x) const;

 private:
  PermGroup G_;
  CocycleFamily theta_;
  long D_;
};

bool u_elem_eq(const UElem& x, const UElem& y);
UElem u_add(const UElem& x, const UElem& y);
UElem u_sub(const UElem& x, const UElem& y);

// Shift-operator model on basis states |n, m, s> with |n|, |m| <= D: checks the
// defining relations of the sector-split torus exactly on interior states.
AxiomReport verify_rep_window(int N, long D);

// q = 1 degeneration: the window becomes commutative and the coproduct follows
// the sector-flip crossed-product pattern on generators.
AxiomReport verify_q1_degeneration(long D);

// Multiplier coproduct suite for one delta-product family ("dual-c" or "z3"):
// closed forms against each leg are cross-checked with the direct windowed
// sums, then the coassociativity identity is run on seeded random triples.
AxiomReport multiplier_report(const std::string& family, int N, long D, int triples,
                              unsigned long seed);

// Serializes a truncated window (basis, products, coproducts) for the CLI.
Json dt_window_json(int N, long D);

}  // namespace qmt
