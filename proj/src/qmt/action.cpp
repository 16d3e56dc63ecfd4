#include "qmt/action.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "qmt/builders.hpp"
#include "qmt/lattice.hpp"

namespace qmt {

namespace {

void push_fail(AxiomCheck& c, Json w) {
  c.pass = false;
  ++c.fail_count;
  if (c.witness.is_null()) {
    c.witness = std::move(w);
    c.residual = 1.0;
  }
}

using TensorMap = std::map<std::pair<int, int>, Cyclo>;

void tensor_acc(TensorMap& m, int j, int k, const Cyclo& c) {
  auto it = m.find({j, k});
  if (it == m.end()) m.emplace(std::make_pair(j, k), c);
  else it->second += c;
}

void tensor_prune(TensorMap& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->second.is_zero()) it = m.erase(it);
    else ++it;
  }
}

TensorMap comult_map(const Presentation& P, const Vec& v) {
  TensorMap m;
  for (int i = 0; i < P.dim; ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& t : P.comult[i]) tensor_acc(m, t.j, t.k, v[i] * t.c);
  }
  tensor_prune(m);
  return m;
}

struct ActionContext {
  Presentation A, W;
  Pairing pr;

  Cyclo pair(const Vec& f, int x) const {
    Cyclo acc;
    for (int a = 0; a < W.dim; ++a)
      if (!f[a].is_zero() && !pr.M.at(a, x).is_zero()) acc += f[a] * pr.M.at(a, x);
    return acc;
  }

  // f . a = a_(1) <f, a_(2)>
  Vec act(const Vec& f, const Vec& a) const {
    Vec out = vec_zero(A.dim);
    for (int i = 0; i < A.dim; ++i) {
      if (a[i].is_zero()) continue;
      for (const auto& t : A.comult[i]) {
        Cyclo val = pair(f, t.k);
        if (!val.is_zero()) out[t.j] += a[i] * t.c * val;
      }
    }
    return out;
  }
};

}  // namespace

AxiomReport action_report(int N) {
  AxiomReport rep;
  rep.subject = "action N=" + std::to_string(N);
  ActionContext ctx{build_kp(N), build_dual_w(N), canonical_kpw_pairing(N)};
  const Presentation& A = ctx.A;
  const Presentation& W = ctx.W;

  {
    AxiomCheck c;
    c.axiom = "module_associative";  // (fg) . a = f . (g . a)
    for (int f = 0; f < W.dim; ++f)
      for (int g = 0; g < W.dim; ++g) {
        Vec fg = mul_vec(W, basis_vec(W.dim, f), basis_vec(W.dim, g));
        for (int x = 0; x < A.dim; ++x) {
          Vec lhs = ctx.act(fg, basis_vec(A.dim, x));
          Vec rhs = ctx.act(basis_vec(W.dim, f), ctx.act(basis_vec(W.dim, g), basis_vec(A.dim, x)));
          if (!vec_eq(lhs, rhs))
            push_fail(c, Json{{"f", W.labels[f]}, {"g", W.labels[g]}, {"x", A.labels[x]}});
        }
      }
    rep.checks.push_back(c);
  }

  {
    AxiomCheck c;
    c.axiom = "module_algebra";  // f . (xy) = sum (f1 . x)(f2 . y)
    for (int f = 0; f < W.dim; ++f)
      for (int x = 0; x < A.dim; ++x)
        for (int y = 0; y < A.dim; ++y) {
          Vec xy = mul_vec(A, basis_vec(A.dim, x), basis_vec(A.dim, y));
          Vec lhs = ctx.act(basis_vec(W.dim, f), xy);
          Vec rhs = vec_zero(A.dim);
          for (const auto& t : W.comult[f]) {
            Vec part = mul_vec(A, ctx.act(basis_vec(W.dim, t.j), basis_vec(A.dim, x)),
                               ctx.act(basis_vec(W.dim, t.k), basis_vec(A.dim, y)));
            rhs = vec_add(rhs, vec_scale(part, t.c));
          }
          if (!vec_eq(lhs, rhs))
            push_fail(c, Json{{"f", W.labels[f]}, {"x", A.labels[x]}, {"y", A.labels[y]}});
        }
    rep.checks.push_back(c);
  }

  {
    AxiomCheck c;
    c.axiom = "unit_action";  // f . 1 = eps(f) 1
    for (int f = 0; f < W.dim; ++f) {
      Vec lhs = ctx.act(basis_vec(W.dim, f), A.unit);
      Vec rhs = vec_scale(A.unit, W.counit[f]);
      if (!vec_eq(lhs, rhs)) push_fail(c, Json{{"f", W.labels[f]}});
    }
    rep.checks.push_back(c);
  }

  {
    AxiomCheck c;
    c.axiom = "generator_table";
    Vec e1 = vec_zero(W.dim), e2 = vec_zero(W.dim), sigma = vec_zero(W.dim);
    for (int n = 0; n < N; ++n)
      for (int m = 0; m < N; ++m) {
        e1[kp_index(N, 0, n, m)] = Cyclo(long(n));
        e2[kp_index(N, 0, n, m)] = Cyclo(long(m));
        sigma[kp_index(N, 1, n, m)] = Cyclo::one();
      }
    auto U = [&](int s) { return basis_vec(A.dim, kp_index(N, s, 1, 0)); };
    auto V = [&](int s) { return basis_vec(A.dim, kp_index(N, s, 0, 1)); };
    for (int s = 0; s < 2; ++s) {
      if (!vec_eq(ctx.act(e1, U(s)), U(s))) push_fail(c, Json{{"identity", "e1.U"}, {"s", s}});
      if (!vec_is_zero(ctx.act(e1, V(s)))) push_fail(c, Json{{"identity", "e1.V"}, {"s", s}});
      if (!vec_eq(ctx.act(e2, V(s)), V(s))) push_fail(c, Json{{"identity", "e2.V"}, {"s", s}});
      if (!vec_is_zero(ctx.act(e2, U(s)))) push_fail(c, Json{{"identity", "e2.U"}, {"s", s}});
      if (!vec_eq(ctx.act(sigma, U(s)), V(1 - s)))
        push_fail(c, Json{{"identity", "sigma.U"}, {"s", s}});
      if (!vec_eq(ctx.act(sigma, V(s)), U(1 - s)))
        push_fail(c, Json{{"identity", "sigma.V"}, {"s", s}});
    }
    rep.checks.push_back(c);
  }

  return rep;
}

AxiomReport lie_report(int N) {
  AxiomReport rep;
  rep.subject = "lie N=" + std::to_string(N);
  Presentation W = build_dual_w(N);
  Cyclo q = Cyclo::zeta(N, 1);
  Cyclo r = half_power(N);
  auto wp = [&](int m, int n) { return kp_index(N, 0, m, n); };
  auto wm = [&](int m, int n) { return kp_index(N, 1, m, n); };

  Vec sigma = vec_zero(W.dim), e1 = vec_zero(W.dim), e2 = vec_zero(W.dim);
  for (int n = 0; n < N; ++n)
    for (int m = 0; m < N; ++m) {
      sigma[wm(n, m)] = Cyclo::one();
      e1[wp(n, m)] = Cyclo(long(n));
      e2[wp(n, m)] = Cyclo(long(m));
    }

  {
    AxiomCheck c;
    c.axiom = "sigma_squared_one";
    if (!vec_eq(mul_vec(W, sigma, sigma), W.unit)) push_fail(c, Json{{"defect", "sigma^2 != 1"}});
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c;
    c.axiom = "e_fields_commute";
    if (!vec_eq(mul_vec(W, e1, e2), mul_vec(W, e2, e1)))
      push_fail(c, Json{{"defect", "[e1,e2] != 0"}});
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c;
    c.axiom = "sigma_intertwines";
    if (!vec_eq(mul_vec(W, e1, sigma), mul_vec(W, sigma, e2)))
      push_fail(c, Json{{"defect", "e1 sigma != sigma e2"}});
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c;
    c.axiom = "sigma_translates";
    for (int m = 0; m < N; ++m)
      for (int n = 0; n < N; ++n) {
        if (!vec_eq(mul_vec(W, sigma, basis_vec(W.dim, wp(m, n))), basis_vec(W.dim, wm(m, n))))
          push_fail(c, Json{{"side", "left"}, {"m", m}, {"n", n}});
        if (!vec_eq(mul_vec(W, basis_vec(W.dim, wp(m, n)), sigma), basis_vec(W.dim, wm(n, m))))
          push_fail(c, Json{{"side", "right"}, {"m", m}, {"n", n}});
      }
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c;
    c.axiom = "q_power_grouplike";  // sum q^n w+^{nm}
    Vec g = vec_zero(W.dim);
    for (int n = 0; n < N; ++n)
      for (int m = 0; m < N; ++m) g[wp(n, m)] = q.pow(n);
    TensorMap dm = comult_map(W, g);
    TensorMap want;
    for (int i = 0; i < W.dim; ++i)
      for (int j = 0; j < W.dim; ++j)
        if (!g[i].is_zero() && !g[j].is_zero()) tensor_acc(want, i, j, g[i] * g[j]);
    tensor_prune(want);
    if (!(dm == want) || !(counit_of(W, g) == Cyclo::one()))
      push_fail(c, Json{{"defect", "q^{e1} not grouplike"}});
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c;
    c.axiom = "e1_primitive_defect";
    // Delta e1 = e1 x 1 + 1 x e1 - N sum_{i+k >= N} w+^{ij} x w+^{kl}
    TensorMap lhs = comult_map(W, e1);
    TensorMap want;
    for (int i = 0; i < W.dim; ++i) {
      if (!e1[i].is_zero())
        for (int u = 0; u < W.dim; ++u)
          if (!W.unit[u].is_zero()) tensor_acc(want, i, u, e1[i] * W.unit[u]);
      if (!W.unit[i].is_zero())
        for (int u = 0; u < W.dim; ++u)
          if (!e1[u].is_zero()) tensor_acc(want, i, u, W.unit[i] * e1[u]);
    }
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k) {
        if (i + k < N) continue;
        for (int j = 0; j < N; ++j)
          for (int l = 0; l < N; ++l)
            tensor_acc(want, wp(i, j), wp(k, l), Cyclo(long(-N)));
      }
    tensor_prune(want);
    if (!(lhs == want)) push_fail(c, Json{{"defect", "primitive defect mismatch"}});
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c;
    c.axiom = "coproduct_twist";  // Delta sigma = (sigma x sigma) X
    TensorMap lhs = comult_map(W, sigma);
    TensorMap rhs;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k)
          for (int l = 0; l < N; ++l) {
            Cyclo coeff = r.pow(long(j) * k - long(i) * l);
            Vec left = mul_vec(W, sigma, basis_vec(W.dim, wp(i, j)));
            Vec right = mul_vec(W, sigma, basis_vec(W.dim, wp(k, l)));
            for (int p = 0; p < W.dim; ++p) {
              if (left[p].is_zero()) continue;
              for (int s = 0; s < W.dim; ++s)
                if (!right[s].is_zero()) tensor_acc(rhs, p, s, coeff * left[p] * right[s]);
            }
          }
    tensor_prune(rhs);
    TensorMap diff = lhs;
    for (const auto& [k, cc] : rhs) {
      auto it = diff.find(k);
      if (it == diff.end()) diff.emplace(k, -cc);
      else it->second -= cc;
    }
    tensor_prune(diff);
    for (const auto& [k, cc] : diff)
      push_fail(c, Json{{"slot", Json::array({W.labels[k.first], W.labels[k.second]})},
                        {"difference", cyclo_to_json(cc)}});
    rep.checks.push_back(c);
  }
  return rep;
}

AxiomReport commutator_report(const std::string& family, int N) {
  AxiomReport rep;
  rep.subject = "commutators " + family + " N=" + std::to_string(N);
  PermGroup G = family == "flip" ? named_group("Z2", 2) : named_group("Z3", 3);
  int n = G.n;
  CocycleFamily theta;
  if (family == "z3") theta = t1_family(G, 1, 2, N);
  else if (family == "flip") theta = flip_family(G, mpq_class(1, N));
  else if (family == "trivial") {
    theta.G = G;
    theta.n = n;
    theta.forms.assign(G.size(), qmat_zero(n));
  } else {
    throw std::invalid_argument("unknown commutator family: " + family);
  }
  Lattice L = Lattice::scaled(n, N);
  Presentation fib = build_fibration(G, theta, L);

  auto gen = [&](int m) {
    Vec v = vec_zero(fib.dim);
    ZVec e(n, 0);
    e[m] = 1;
    for (size_t g = 0; g < G.size(); ++g) v[fib_index(L, int(g), e)] = Cyclo::one();
    return v;
  };

  AxiomCheck c;
  c.axiom = "commutator_closed_form";
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) {
      Vec um = gen(m), uk = gen(k);
      Vec lhs = mul_vec(fib, mul_vec(fib, apply_antilinear(fib.star, um),
                                     apply_antilinear(fib.star, uk)),
                        mul_vec(fib, um, uk));
      Vec want = vec_zero(fib.dim);
      ZVec em(n, 0), ek(n, 0);
      em[m] = 1;
      ek[k] = 1;
      ZVec zero(n, 0);
      for (size_t g = 0; g < G.size(); ++g) {
        mpq_class ph = qmat_eval(theta.forms[g], em, ek) - qmat_eval(theta.forms[g], ek, em);
        want[fib_index(L, int(g), zero)] = Cyclo::phase(ph);
      }
      if (!vec_eq(lhs, want)) push_fail(c, Json{{"m", m}, {"k", k}});
    }
  rep.checks.push_back(c);
  return rep;
}

}  // namespace qmt
