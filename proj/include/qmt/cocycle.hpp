#pragma once
// Rational bilinear forms theta_g on Z^n indexed by group elements, subject to
// theta_{gh}(m, n) = theta_h(m, n) + theta_g(h m, h n) and theta_e = 0.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "qmt/lattice.hpp"
#include "qmt/permgroup.hpp"

namespace qmt {

using QMat = std::vector<std::vector<mpq_class>>;

QMat qmat_zero(int n);
QMat qmat_add(const QMat& a, const QMat& b);
QMat qmat_sub(const QMat& a, const QMat& b);
QMat qmat_scale(const QMat& a, const mpq_class& c);
QMat qmat_transpose(const QMat& a);
QMat qmat_pullback(const Perm& p, const QMat& a);  // (p . theta)(m, n) = theta(p m, p n)
bool qmat_is_zero(const QMat& a);
bool qmat_is_antisymmetric(const QMat& a);
mpq_class qmat_eval(const QMat& a, const ZVec& x, const ZVec& y);  // x^T a y

struct CocycleFamily {
  PermGroup G;
  int n = 0;
  std::vector<QMat> forms;  // aligned with G.elems

  bool antisymmetric() const;
};

struct CocycleWitness {
  int g = 0, h = 0, i = 0, j = 0;
};

// Empty optional means the family satisfies the condition exactly.
std::optional<CocycleWitness> cocycle_defect(const CocycleFamily& fam);

struct CocycleBasis {
  int dim = 0;
  std::vector<CocycleFamily> basis;
};

CocycleBasis solve_cocycles(const PermGroup& G, bool antisym);

// Builds the family generated by prescribed forms on the group generators.
// Throws if the assignment is inconsistent with the relations of G.
CocycleFamily family_from_generator_forms(const PermGroup& G, const std::vector<QMat>& gen_forms);

CocycleFamily antisymmetrize(const CocycleFamily& fam);
// Basis rescale exponent t with factor e^{2 pi i t} attached to label j in sector g
// when passing between a family and its antisymmetrization.
mpq_class rescale_exponent(const CocycleFamily& fam, int g, const ZVec& j);

// Solves theta_g = phi - g . phi for a single form phi; exact, over Q.
std::optional<QMat> coboundary_potential(const CocycleFamily& fam);
// Closed form (1/|G|) sum_u theta_u; always a potential when the condition holds.
QMat averaging_potential(const CocycleFamily& fam);
CocycleFamily coboundary_of(const PermGroup& G, const QMat& phi);

// Degree-k form-valued cochains and the simplicial differential (k = 0, 1, 2).
struct Cochain {
  int k = 0;
  const PermGroup* G = nullptr;
  int n = 0;
  std::map<std::vector<int>, QMat> vals;  // keyed by element-index tuples of length k
};
Cochain coboundary(const Cochain& c);

nlohmann::ordered_json group_to_json(const PermGroup& G);
PermGroup group_from_json(const nlohmann::json& j);
nlohmann::ordered_json cocycle_to_json(const CocycleFamily& fam);
CocycleFamily cocycle_from_json(const nlohmann::json& j);

}  // namespace qmt
