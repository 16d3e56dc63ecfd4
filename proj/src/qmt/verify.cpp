#include "qmt/verify.hpp"

#include <functional>
#include <map>
#include <optional>
#include <random>

#include "qmt/parallel.hpp"

namespace qmt {

namespace {

using SV = std::map<int, Cyclo>;    // sparse vector
using ST = std::map<long, Cyclo>;   // sparse tensor, flattened key

void acc(SV& m, int k, const Cyclo& c) {
  auto it = m.find(k);
  if (it == m.end()) m.emplace(k, c);
  else it->second += c;
}

void acc(ST& m, long k, const Cyclo& c) {
  auto it = m.find(k);
  if (it == m.end()) m.emplace(k, c);
  else it->second += c;
}

template <class M>
double defect_norm(const M& m) {
  double s = 0;
  for (const auto& [k, c] : m) s += std::norm(c.embed());
  return std::sqrt(s);
}

template <class M>
bool is_zero_map(const M& m) {
  for (const auto& [k, c] : m)
    if (!c.is_zero()) return false;
  return true;
}

struct ScanChunk {
  long fails = 0;
  double residual = 0;
  Json witness;  // first failing item in this chunk
};

// Runs item(idx) over [0, n); item returns a witness when the check fails there.
AxiomCheck scan_axiom(const std::string& name, long n,
                      const std::function<std::optional<std::pair<Json, double>>(long)>& item) {
  auto worker = [&](long b, long e) {
    ScanChunk ch;
    for (long idx = b; idx < e; ++idx) {
      auto w = item(idx);
      if (!w) continue;
      ++ch.fails;
      if (ch.witness.is_null()) ch.witness = w->first;
      ch.residual = std::max(ch.residual, w->second);
    }
    return ch;
  };
  auto merge = [](std::vector<ScanChunk>& parts) {
    ScanChunk out;
    for (auto& p : parts) {
      out.fails += p.fails;
      out.residual = std::max(out.residual, p.residual);
      if (out.witness.is_null() && !p.witness.is_null()) out.witness = p.witness;
    }
    return out;
  };
  ScanChunk ch = parallel_chunks<ScanChunk>(n, worker, merge);
  AxiomCheck check;
  check.axiom = name;
  check.pass = ch.fails == 0;
  check.residual = ch.residual;
  check.fail_count = ch.fails;
  check.witness = ch.witness;
  return check;
}

Json tuple_witness(const Presentation& P, std::initializer_list<int> idxs, const char* what) {
  Json w;
  Json labels = Json::array();
  for (int i : idxs) labels.push_back(P.labels[i]);
  w["at"] = labels;
  w["defect"] = what;
  return w;
}

}  // namespace

bool AxiomReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

double AxiomReport::max_residual() const {
  double r = 0;
  for (const auto& c : checks) r = std::max(r, c.residual);
  return r;
}

Json AxiomReport::to_json() const {
  Json j;
  j["subject"] = subject;
  j["all_pass"] = all_pass();
  j["s_squared_order"] = s_squared_order;
  j["max_residual"] = fmt_double(max_residual());
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["axiom"] = c.axiom;
    e["status"] = c.pass ? "pass" : "fail";
    e["residual"] = fmt_double(c.residual);
    e["fail_count"] = c.fail_count;
    e["witness"] = c.witness;
    arr.push_back(e);
  }
  j["checks"] = arr;
  return j;
}

AxiomReport verify_hopf(const Presentation& P, bool with_star) {
  AxiomReport rep;
  rep.subject = P.meta.name;
  const int d = P.dim;
  const long d2 = long(d) * d, d3 = d2 * d;

  rep.checks.push_back(scan_axiom("associativity", d3, [&](long idx) -> std::optional<std::pair<Json, double>> {
    int i = int(idx / d2), j = int((idx / d) % d), k = int(idx % d);
    SV diff;
    for (const Term& t : P.product(i, j))
      for (const Term& u : P.product(t.k, k)) acc(diff, u.k, t.c * u.c);
    for (const Term& t : P.product(j, k))
      for (const Term& u : P.product(i, t.k)) acc(diff, u.k, -(t.c * u.c));
    if (is_zero_map(diff)) return std::nullopt;
    return std::make_pair(tuple_witness(P, {i, j, k}, "(xy)z - x(yz) != 0"), defect_norm(diff));
  }));

  rep.checks.push_back(scan_axiom("unit_element", d, [&](long idx) -> std::optional<std::pair<Json, double>> {
    int i = int(idx);
    Vec e = basis_vec(d, i);
    Vec l = mul_vec(P, P.unit, e), r = mul_vec(P, e, P.unit);
    Vec dl = vec_sub(l, e), dr = vec_sub(r, e);
    if (vec_is_zero(dl) && vec_is_zero(dr)) return std::nullopt;
    return std::make_pair(tuple_witness(P, {i}, "1x != x or x1 != x"),
                          std::max(vec_norm(dl), vec_norm(dr)));
  }));

  rep.checks.push_back(scan_axiom("coassociativity", d, [&](long idx) -> std::optional<std::pair<Json, double>> {
    int i = int(idx);
    ST diff;
    for (const CoTerm& t : P.comult[i]) {
      for (const CoTerm& u : P.comult[t.j]) acc(diff, (long(u.j) * d + u.k) * d + t.k, t.c * u.c);
      for (const CoTerm& u : P.comult[t.k]) acc(diff, (long(t.j) * d + u.j) * d + u.k, -(t.c * u.c));
    }
    if (is_zero_map(diff)) return std::nullopt;
    return std::make_pair(tuple_witness(P, {i}, "(Delta x id)Delta != (id x Delta)Delta"),
                          defect_norm(diff));
  }));

  rep.checks.push_back(scan_axiom("counit", d, [&](long idx) -> std::optional<std::pair<Json, double>> {
    int i = int(idx);
    SV left, right;
    for (const CoTerm& t : P.comult[i]) {
      acc(left, t.k, t.c * P.counit[t.j]);
      acc(right, t.j, t.c * P.counit[t.k]);
    }
    acc(left, i, -Cyclo::one());
    acc(right, i, -Cyclo::one());
    if (is_zero_map(left) && is_zero_map(right)) return std::nullopt;
    return std::make_pair(tuple_witness(P, {i}, "counit legs do not collapse Delta"),
                          std::max(defect_norm(left), defect_norm(right)));
  }));

  rep.checks.push_back(scan_axiom("comult_mult", d2, [&](long idx) -> std::optional<std::pair<Json, double>> {
    int i = int(idx / d), j = int(idx % d);
    ST diff;
    for (const Term& t : P.product(i, j))
      for (const CoTerm& u : P.comult[t.k]) acc(diff, long(u.j) * d + u.k, t.c * u.c);
    for (const CoTerm& a : P.comult[i])
      for (const CoTerm& b : P.comult[j]) {
        Cyclo f = a.c * b.c;
        for (const Term& ta : P.product(a.j, b.j))
          for (const Term& tb : P.product(a.k, b.k))
            acc(diff, long(ta.k) * d + tb.k, -(f * ta.c * tb.c));
      }
    if (is_zero_map(diff)) return std::nullopt;
    return std::make_pair(tuple_witness(P, {i, j}, "Delta(xy) != Delta(x)Delta(y)"),
                          defect_norm(diff));
  }));

  rep.checks.push_back(scan_axiom("counit_mult", d2, [&](long idx) -> std::optional<std::pair<Json, double>> {
    int i = int(idx / d), j = int(idx % d);
    Cyclo diff = -(P.counit[i] * P.counit[j]);
    for (const Term& t : P.product(i, j)) diff += t.c * P.counit[t.k];
    if (diff.is_zero()) return std::nullopt;
    return std::make_pair(tuple_witness(P, {i, j}, "eps(xy) != eps(x)eps(y)"),
                          std::abs(diff.embed()));
  }));

  rep.checks.push_back(scan_axiom("unit_comult", 1, [&](long) -> std::optional<std::pair<Json, double>> {
    ST diff;
    for (int i = 0; i < d; ++i) {
      if (P.unit[i].is_zero()) continue;
      for (const CoTerm& t : P.comult[i]) acc(diff, long(t.j) * d + t.k, P.unit[i] * t.c);
    }
    for (int a = 0; a < d; ++a) {
      if (P.unit[a].is_zero()) continue;
      for (int b = 0; b < d; ++b) {
        if (P.unit[b].is_zero()) continue;
        acc(diff, long(a) * d + b, -(P.unit[a] * P.unit[b]));
      }
    }
    Cyclo eps = counit_of(P, P.unit) - Cyclo::one();
    if (is_zero_map(diff) && eps.is_zero()) return std::nullopt;
    Json w;
    w["defect"] = "Delta(1) != 1 x 1 or eps(1) != 1";
    return std::make_pair(w, defect_norm(diff) + std::abs(eps.embed()));
  }));

  auto antipode_side = [&](bool left) {
    std::string name = left ? "antipode_left" : "antipode_right";
    return scan_axiom(name, d, [&, left](long idx) -> std::optional<std::pair<Json, double>> {
      int i = int(idx);
      Vec sum = vec_zero(d);
      for (const CoTerm& t : P.comult[i]) {
        Vec prod;
        if (left) {
          Vec sa = vec_zero(d);
          for (const Term& s : P.antipode[t.j]) sa[s.k] += s.c;
          prod = mul_vec(P, sa, basis_vec(d, t.k));
        } else {
          Vec sb = vec_zero(d);
          for (const Term& s : P.antipode[t.k]) sb[s.k] += s.c;
          prod = mul_vec(P, basis_vec(d, t.j), sb);
        }
        sum = vec_add(sum, vec_scale(prod, t.c));
      }
      Vec want = vec_scale(P.unit, P.counit[i]);
      Vec diff = vec_sub(sum, want);
      if (vec_is_zero(diff)) return std::nullopt;
      return std::make_pair(tuple_witness(P, {i}, "m(S x id)Delta != eps 1"), vec_norm(diff));
    });
  };
  rep.checks.push_back(antipode_side(true));
  rep.checks.push_back(antipode_side(false));

  if (with_star) {
    rep.checks.push_back(scan_axiom("star_involutive", d, [&](long idx) -> std::optional<std::pair<Json, double>> {
      int i = int(idx);
      Vec ss = apply_antilinear(P.star, apply_antilinear(P.star, basis_vec(d, i)));
      Vec diff = vec_sub(ss, basis_vec(d, i));
      if (vec_is_zero(diff)) return std::nullopt;
      return std::make_pair(tuple_witness(P, {i}, "x** != x"), vec_norm(diff));
    }));

    rep.checks.push_back(scan_axiom("star_antimultiplicative", d2, [&](long idx) -> std::optional<std::pair<Json, double>> {
      int i = int(idx / d), j = int(idx % d);
      Vec prod = vec_zero(d);
      for (const Term& t : P.product(i, j)) prod[t.k] += t.c;
      Vec lhs = apply_antilinear(P.star, prod);
      Vec rhs = mul_vec(P, apply_antilinear(P.star, basis_vec(d, j)),
                        apply_antilinear(P.star, basis_vec(d, i)));
      Vec diff = vec_sub(lhs, rhs);
      if (vec_is_zero(diff)) return std::nullopt;
      return std::make_pair(tuple_witness(P, {i, j}, "(xy)* != y* x*"), vec_norm(diff));
    }));

    rep.checks.push_back(scan_axiom("star_comultiplicative", d, [&](long idx) -> std::optional<std::pair<Json, double>> {
      int i = int(idx);
      ST diff;
      for (const Term& s : P.star[i])
        for (const CoTerm& t : P.comult[s.k]) acc(diff, long(t.j) * d + t.k, s.c * t.c);
      for (const CoTerm& t : P.comult[i]) {
        Cyclo f = t.c.conj();
        for (const Term& sa : P.star[t.j])
          for (const Term& sb : P.star[t.k]) acc(diff, long(sa.k) * d + sb.k, -(f * sa.c * sb.c));
      }
      if (is_zero_map(diff)) return std::nullopt;
      return std::make_pair(tuple_witness(P, {i}, "Delta(x*) != (* x *)Delta(x)"),
                            defect_norm(diff));
    }));

    rep.checks.push_back(scan_axiom("star_antipode", d, [&](long idx) -> std::optional<std::pair<Json, double>> {
      int i = int(idx);
      auto T = [&](const Vec& v) { return apply_antilinear(P.star, apply_linear(P.antipode, v)); };
      Vec tt = T(T(basis_vec(d, i)));
      Vec diff = vec_sub(tt, basis_vec(d, i));
      if (vec_is_zero(diff)) return std::nullopt;
      return std::make_pair(tuple_witness(P, {i}, "(* S)^2 != id"), vec_norm(diff));
    }));
  }

  // Order of S^2 (reported, never asserted).
  {
    Mat<Cyclo> s2(d, d);
    for (int i = 0; i < d; ++i) {
      Vec col = apply_linear(P.antipode, apply_linear(P.antipode, basis_vec(d, i)));
      for (int r = 0; r < d; ++r) s2.at(r, i) = col[r];
    }
    Mat<Cyclo> acc_m = s2;
    Mat<Cyclo> id = Mat<Cyclo>::identity(d);
    for (int k = 1; k <= 16; ++k) {
      bool isid = true;
      for (int i = 0; i < d && isid; ++i)
        for (int j = 0; j < d; ++j)
          if (acc_m.at(i, j) != id.at(i, j)) { isid = false; break; }
      if (isid) { rep.s_squared_order = k; break; }
      if (k < 16) acc_m = mat_mul(acc_m, s2);
    }
  }
  return rep;
}

AxiomReport verify_morphism(const std::string& name, const Presentation& A,
                            const Presentation& B, const Mat<Cyclo>& f,
                            const MorphismOptions& opt) {
  AxiomReport rep;
  rep.subject = name;
  const int da = A.dim, db = B.dim;
  auto fcol = [&](int i) {
    Vec v = vec_zero(db);
    for (int r = 0; r < db; ++r) v[r] = f.at(r, i);
    return v;
  };
  auto apply_f = [&](const Vec& x) {
    Vec v = vec_zero(db);
    for (int i = 0; i < da; ++i) {
      if (x[i].is_zero()) continue;
      for (int r = 0; r < db; ++r) v[r] += f.at(r, i) * x[i];
    }
    return v;
  };

  if (opt.algebra) {
    rep.checks.push_back(scan_axiom("algebra", long(da) * da, [&](long idx) -> std::optional<std::pair<Json, double>> {
      int i = int(idx / da), j = int(idx % da);
      Vec prodA = vec_zero(da);
      for (const Term& t : A.product(i, j)) prodA[t.k] += t.c;
      Vec lhs = apply_f(prodA);
      Vec rhs = mul_vec(B, fcol(i), fcol(j));
      Vec diff = vec_sub(lhs, rhs);
      if (vec_is_zero(diff)) return std::nullopt;
      return std::make_pair(tuple_witness(A, {i, j}, "f(xy) != f(x)f(y)"), vec_norm(diff));
    }));
  }
  if (opt.unit) {
    rep.checks.push_back(scan_axiom("unit", 1, [&](long) -> std::optional<std::pair<Json, double>> {
      Vec diff = vec_sub(apply_f(A.unit), B.unit);
      if (vec_is_zero(diff)) return std::nullopt;
      Json w;
      w["defect"] = "f(1) != 1";
      return std::make_pair(w, vec_norm(diff));
    }));
  }
  if (opt.coalgebra) {
    rep.checks.push_back(scan_axiom("coalgebra", da, [&](long idx) -> std::optional<std::pair<Json, double>> {
      int i = int(idx);
      ST diff;
      for (const CoTerm& t : A.comult[i]) {
        Vec fa = fcol(t.j), fb = fcol(t.k);
        for (int u = 0; u < db; ++u) {
          if (fa[u].is_zero()) continue;
          for (int v = 0; v < db; ++v) {
            if (fb[v].is_zero()) continue;
            acc(diff, long(u) * db + v, t.c * fa[u] * fb[v]);
          }
        }
      }
      Vec fi = fcol(i);
      for (int k = 0; k < db; ++k) {
        if (fi[k].is_zero()) continue;
        for (const CoTerm& t : B.comult[k]) acc(diff, long(t.j) * db + t.k, -(fi[k] * t.c));
      }
      if (is_zero_map(diff)) return std::nullopt;
      return std::make_pair(tuple_witness(A, {i}, "(f x f)Delta != Delta f"), defect_norm(diff));
    }));
  }
  if (opt.counit) {
    rep.checks.push_back(scan_axiom("counit", da, [&](long idx) -> std::optional<std::pair<Json, double>> {
      int i = int(idx);
      Cyclo diff = counit_of(B, fcol(i)) - A.counit[i];
      if (diff.is_zero()) return std::nullopt;
      return std::make_pair(tuple_witness(A, {i}, "eps(f(x)) != eps(x)"), std::abs(diff.embed()));
    }));
  }
  if (opt.antipode) {
    rep.checks.push_back(scan_axiom("antipode", da, [&](long idx) -> std::optional<std::pair<Json, double>> {
      int i = int(idx);
      Vec sa = vec_zero(da);
      for (const Term& t : A.antipode[i]) sa[t.k] += t.c;
      Vec diff = vec_sub(apply_f(sa), apply_linear(B.antipode, fcol(i)));
      if (vec_is_zero(diff)) return std::nullopt;
      return std::make_pair(tuple_witness(A, {i}, "f(Sx) != S f(x)"), vec_norm(diff));
    }));
  }
  if (opt.star) {
    rep.checks.push_back(scan_axiom("star", da, [&](long idx) -> std::optional<std::pair<Json, double>> {
      int i = int(idx);
      Vec st = vec_zero(da);
      for (const Term& t : A.star[i]) st[t.k] += t.c;
      Vec diff = vec_sub(apply_f(st), apply_antilinear(B.star, fcol(i)));
      if (vec_is_zero(diff)) return std::nullopt;
      return std::make_pair(tuple_witness(A, {i}, "f(x*) != f(x)*"), vec_norm(diff));
    }));
  }
  if (opt.invertible) {
    rep.checks.push_back(scan_axiom("invertible", 1, [&](long) -> std::optional<std::pair<Json, double>> {
      if (da == db && rank_of(f) == da) return std::nullopt;
      Json w;
      w["defect"] = "map is not a linear isomorphism";
      return std::make_pair(w, 1.0);
    }));
  }
  return rep;
}

bool MutationReport::all_detected() const {
  for (const auto& o : outcomes)
    if (!o.detected) return false;
  return true;
}

Json MutationReport::to_json() const {
  Json j;
  j["seed"] = seed;
  j["count"] = outcomes.size();
  j["all_detected"] = all_detected();
  Json arr = Json::array();
  for (const auto& o : outcomes) {
    Json e;
    e["product"] = Json::array({o.label_i, o.label_j});
    e["term"] = o.term;
    e["detected"] = o.detected;
    e["first_failed_axiom"] = o.first_failed_axiom;
    arr.push_back(e);
  }
  j["mutations"] = arr;
  return j;
}

MutationReport mutation_scan(const Presentation& P, int count, unsigned long seed) {
  MutationReport rep;
  rep.seed = seed;
  struct Pos { int i, j, t; };
  std::vector<Pos> pool;
  for (int i = 0; i < P.dim; ++i)
    for (int j = 0; j < P.dim; ++j) {
      const Column& col = P.product(i, j);
      for (size_t t = 0; t < col.size(); ++t) pool.push_back({i, j, int(t)});
    }
  std::mt19937_64 gen(seed);
  int take = std::min<int>(count, int(pool.size()));
  for (int c = 0; c < take; ++c) {
    // partial Fisher-Yates: avoids distribution objects for cross-platform stability
    size_t r = c + size_t(gen() % (pool.size() - c));
    std::swap(pool[c], pool[r]);
    Pos p = pool[c];
    Presentation Q = P;
    Q.mult[size_t(p.i) * P.dim + p.j][p.t].c = -Q.mult[size_t(p.i) * P.dim + p.j][p.t].c;
    AxiomReport ar = verify_hopf(Q);
    MutationOutcome out;
    out.mult_i = p.i;
    out.mult_j = p.j;
    out.term = p.t;
    out.label_i = P.labels[p.i];
    out.label_j = P.labels[p.j];
    out.detected = !ar.all_pass();
    for (const auto& chk : ar.checks)
      if (!chk.pass) { out.first_failed_axiom = chk.axiom; break; }
    rep.outcomes.push_back(std::move(out));
  }
  return rep;
}

}  // namespace qmt
