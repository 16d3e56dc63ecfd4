#include "qmt/window.hpp"

#include <cstdlib>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>

#include "qmt/builders.hpp"

namespace qmt {

namespace {

std::vector<long> act_long(const Perm& p, const std::vector<long>& v) {
  std::vector<long> out(v.size());
  for (size_t k = 0; k < v.size(); ++k) out[p[k]] = v[k];
  return out;
}

std::vector<long> vsub(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::vector<long> vadd(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::vector<long> vneg(const std::vector<long>& a) {
  std::vector<long> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool vzero(const std::vector<long>& a) {
  for (long x : a)
    if (x != 0) return false;
  return true;
}

ZVec to_zvec(const std::vector<long>& v) {
  ZVec z(v.size());
  for (size_t i = 0; i < v.size(); ++i) z[i] = v[i];
  return z;
}

std::vector<std::vector<long>> box_points(int n, long D) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur(n, -D);
  for (;;) {
    out.push_back(cur);
    int k = n - 1;
    while (k >= 0) {
      if (cur[k] < D) { ++cur[k]; break; }
      cur[k] = -D;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

template <class M>
void acc_term(M& m, const typename M::key_type& k, const Cyclo& c) {
  auto it = m.find(k);
  if (it == m.end()) m.emplace(k, c);
  else it->second += c;
}

template <class M>
void prune(M& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->second.is_zero()) it = m.erase(it);
    else ++it;
  }
}

}  // namespace

DTWindow::DTWindow(int N, long D) : N_(N), D_(D), q_(Cyclo::zeta(N, 1)) {
  if (N < 1) throw std::invalid_argument("window parameter N must be >= 1");
}

bool DTWindow::in_window(long a, long b) const {
  return D_ == 0 || (std::abs(a) <= D_ && std::abs(b) <= D_);
}

DTElem DTWindow::basis(int s, long a, long b) const {
  DTElem e;
  if (!in_window(a, b)) { e.overflow = true; return e; }
  e.t[{s, a, b}] = Cyclo::one();
  return e;
}

DTElem DTWindow::monomial(long a, long b) const {
  DTElem e = basis(0, a, b);
  DTElem m = basis(1, a, b);
  e.overflow = e.overflow || m.overflow;
  for (auto& [k, c] : m.t) acc_term(e.t, k, c);
  return e;
}

DTElem DTWindow::unit() const { return monomial(0, 0); }

DTElem DTWindow::mul(const DTElem& x, const DTElem& y) const {
  DTElem r;
  r.overflow = x.overflow || y.overflow;
  for (const auto& [kx, cx] : x.t)
    for (const auto& [ky, cy] : y.t) {
      if (kx.s != ky.s) continue;  // sectors are orthogonal ideals
      long a = kx.a + ky.a, b = kx.b + ky.b;
      if (!in_window(a, b)) { r.overflow = true; continue; }
      Cyclo coeff = cx * cy;
      if (kx.s == 1) coeff *= q_.pow(kx.b * ky.a);
      acc_term(r.t, DTKey{kx.s, a, b}, coeff);
    }
  prune(r.t);
  return r;
}

DTTensor DTWindow::comult(const DTElem& x) const {
  DTTensor r;
  r.overflow = x.overflow;
  for (const auto& [k, c] : x.t) {
    if (k.s == 0) {
      acc_term(r.t, std::make_pair(k, k), c);
      acc_term(r.t, std::make_pair(DTKey{1, k.b, k.a}, DTKey{1, k.a, k.b}), c * q_.pow(k.a * k.b));
    } else {
      acc_term(r.t, std::make_pair(k, DTKey{0, k.a, k.b}), c);
      acc_term(r.t, std::make_pair(DTKey{0, k.b, k.a}, k), c);
    }
  }
  prune(r.t);
  return r;
}

Cyclo DTWindow::counit(const DTElem& x) const {
  Cyclo acc;
  for (const auto& [k, c] : x.t)
    if (k.s == 0) acc += c;
  return acc;
}

DTElem DTWindow::antipode(const DTElem& x) const {
  DTElem r;
  r.overflow = x.overflow;
  for (const auto& [k, c] : x.t) {
    DTKey tk = k.s == 0 ? DTKey{0, -k.a, -k.b} : DTKey{1, -k.b, -k.a};
    acc_term(r.t, tk, c);
  }
  prune(r.t);
  return r;
}

DTElem DTWindow::star(const DTElem& x) const {
  DTElem r;
  r.overflow = x.overflow;
  for (const auto& [k, c] : x.t) {
    Cyclo coeff = c.conj();
    if (k.s == 1) coeff *= q_.pow(k.a * k.b);
    acc_term(r.t, DTKey{k.s, -k.a, -k.b}, coeff);
  }
  prune(r.t);
  return r;
}

bool dt_elem_eq(const DTElem& x, const DTElem& y) {
  DTElem d = dt_sub(x, y);
  return d.t.empty();
}

DTElem dt_add(const DTElem& x, const DTElem& y) {
  DTElem r = x;
  r.overflow = x.overflow || y.overflow;
  for (const auto& [k, c] : y.t) acc_term(r.t, k, c);
  prune(r.t);
  return r;
}

DTElem dt_sub(const DTElem& x, const DTElem& y) {
  DTElem r = x;
  r.overflow = x.overflow || y.overflow;
  for (const auto& [k, c] : y.t) acc_term(r.t, k, -c);
  prune(r.t);
  return r;
}

Json dt_elem_json(const DTElem& x) {
  Json arr = Json::array();
  for (const auto& [k, c] : x.t) {
    Json e;
    e["sector"] = k.s == 0 ? "+" : "-";
    e["a"] = k.a;
    e["b"] = k.b;
    e["coeff"] = cyclo_to_json(c);
    arr.push_back(e);
  }
  Json j;
  j["terms"] = arr;
  j["overflow"] = x.overflow;
  return j;
}

CWindow::CWindow(PermGroup G, CocycleFamily theta, long D)
    : G_(std::move(G)), theta_(std::move(theta)), D_(D) {
  if (auto w = cocycle_defect(theta_))
    throw std::invalid_argument("window cocycle fails its condition");
  if (theta_.n != G_.n) throw std::invalid_argument("cocycle rank mismatch");
}

bool CWindow::in_window(const std::vector<long>& v) const {
  if (D_ == 0) return true;
  for (long x : v)
    if (std::abs(x) > D_) return false;
  return true;
}

Cyclo CWindow::alpha(int g, const std::vector<long>& i, const std::vector<long>& j) const {
  return Cyclo::phase(qmat_eval(theta_.forms[g], to_zvec(i), to_zvec(j)));
}

CElem CWindow::basis(int g, std::vector<long> i) const {
  CElem e;
  if (!in_window(i)) { e.overflow = true; return e; }
  e.t[{g, std::move(i)}] = Cyclo::one();
  return e;
}

CElem CWindow::mul(const CElem& x, const CElem& y) const {
  CElem r;
  r.overflow = x.overflow || y.overflow;
  for (const auto& [kx, cx] : x.t)
    for (const auto& [ky, cy] : y.t) {
      if (kx.second != act_long(G_.elems[ky.first], ky.second)) continue;
      acc_term(r.t, CKey{G_.mult[kx.first][ky.first], ky.second}, cx * cy);
    }
  prune(r.t);
  return r;
}

Cyclo CWindow::counit(const CElem& x) const {
  Cyclo acc;
  for (const auto& [k, c] : x.t)
    if (vzero(k.second)) acc += c;
  return acc;
}

CElem CWindow::antipode(const CElem& x) const {
  CElem r;
  r.overflow = x.overflow;
  for (const auto& [k, c] : x.t)
    acc_term(r.t, CKey{G_.inv[k.first], vneg(act_long(G_.elems[k.first], k.second))}, c);
  prune(r.t);
  return r;
}

CElem CWindow::star(const CElem& x) const {
  CElem r;
  r.overflow = x.overflow;
  for (const auto& [k, c] : x.t)
    acc_term(r.t, CKey{G_.inv[k.first], act_long(G_.elems[k.first], k.second)}, c.conj());
  prune(r.t);
  return r;
}

CTensor CWindow::delta_right(const CKey& a, const CKey& c) const {
  // Delta(C^k_g)(1 x C^l_h) = alpha_g^{k - h(l), h(l)} C^{k - h(l)}_g x C^l_{gh}
  CTensor r;
  int g = a.first, h = c.first;
  std::vector<long> hl = act_long(G_.elems[h], c.second);
  std::vector<long> i = vsub(a.second, hl);
  if (!in_window(i)) { r.overflow = true; return r; }
  Cyclo coeff = alpha(g, i, hl);
  r.t[{CKey{g, i}, CKey{G_.mult[g][h], c.second}}] = coeff;
  return r;
}

CTensor CWindow::delta_left(const CKey& c, const CKey& a) const {
  // (C^l_h x 1) Delta(C^k_g) = alpha_g^{g^{-1}(l), k - g^{-1}(l)} C^{g^{-1}(l)}_{hg} x C^{k - g^{-1}(l)}_g
  CTensor r;
  int g = a.first, h = c.first;
  std::vector<long> gil = act_long(G_.elems[G_.inv[g]], c.second);
  std::vector<long> j = vsub(a.second, gil);
  if (!in_window(j)) { r.overflow = true; return r; }
  Cyclo coeff = alpha(g, gil, j);
  r.t[{CKey{G_.mult[h][g], gil}, CKey{g, j}}] = coeff;
  return r;
}

CTensor CWindow::delta_right_brute(const CKey& a, const CKey& c) const {
  CTensor r;
  int g = a.first;
  CElem cc = basis(c.first, c.second);
  for (const auto& jv : box_points(G_.n, D_)) {
    CElem leg = mul(basis(g, jv), cc);
    if (leg.t.empty()) continue;
    std::vector<long> i = vsub(a.second, jv);
    if (!in_window(i)) { r.overflow = true; continue; }
    Cyclo coeff = alpha(g, i, jv);
    for (const auto& [k2, c2] : leg.t) acc_term(r.t, std::make_pair(CKey{g, i}, k2), coeff * c2);
  }
  prune(r.t);
  return r;
}

CTensor CWindow::delta_left_brute(const CKey& c, const CKey& a) const {
  CTensor r;
  int g = a.first;
  CElem cc = basis(c.first, c.second);
  for (const auto& iv : box_points(G_.n, D_)) {
    CElem leg = mul(cc, basis(g, iv));
    if (leg.t.empty()) continue;
    std::vector<long> j = vsub(a.second, iv);
    if (!in_window(j)) { r.overflow = true; continue; }
    Cyclo coeff = alpha(g, iv, j);
    for (const auto& [k1, c1] : leg.t) acc_term(r.t, std::make_pair(k1, CKey{g, j}), coeff * c1);
  }
  prune(r.t);
  return r;
}

bool CWindow::coassoc_triple(const CKey& a, const CKey& b, const CKey& c, bool* overflow) const {
  CTriple lhs, rhs;
  CTensor X = delta_right(b, c);
  lhs.overflow = X.overflow;
  for (const auto& [pr, cx] : X.t) {
    CTensor T = delta_left(a, pr.first);
    lhs.overflow = lhs.overflow || T.overflow;
    for (const auto& [uv, ct] : T.t)
      acc_term(lhs.t, std::make_tuple(uv.first, uv.second, pr.second), cx * ct);
  }
  CTensor Y = delta_left(a, b);
  rhs.overflow = Y.overflow;
  for (const auto& [pr, cy] : Y.t) {
    CTensor Z = delta_right(pr.second, c);
    rhs.overflow = rhs.overflow || Z.overflow;
    for (const auto& [uv, cz] : Z.t)
      acc_term(rhs.t, std::make_tuple(pr.first, uv.first, uv.second), cy * cz);
  }
  if (overflow) *overflow = lhs.overflow || rhs.overflow;
  if (lhs.overflow || rhs.overflow) return false;
  for (const auto& [k, c1] : rhs.t) acc_term(lhs.t, k, -c1);
  prune(lhs.t);
  return lhs.t.empty();
}

mpq_class dual_c_parameter(int N) {
  mpq_class t = N % 2 == 0 ? mpq_class(1, 2L * N) : mpq_class(N + 1, 2L * N);
  t.canonicalize();
  return t;
}

CWindow dual_c_window(int N, long D) {
  PermGroup Z2 = named_group("Z2", 2);
  CocycleFamily theta = flip_family(Z2, -dual_c_parameter(N));
  return CWindow(std::move(Z2), std::move(theta), D);
}

UWindow::UWindow(PermGroup G, CocycleFamily theta, long D)
    : G_(std::move(G)), theta_(std::move(theta)), D_(D) {
  if (auto w = cocycle_defect(theta_))
    throw std::invalid_argument("window cocycle fails its condition");
}

bool UWindow::in_window(const std::vector<long>& v) const {
  if (D_ == 0) return true;
  for (long x : v)
    if (std::abs(x) > D_) return false;
  return true;
}

UElem UWindow::basis(int g, std::vector<long> j) const {
  UElem e;
  if (!in_window(j)) { e.overflow = true; return e; }
  e.t[{g, std::move(j)}] = Cyclo::one();
  return e;
}

UElem UWindow::lattice_monomial(const std::vector<long>& v) const {
  UElem e;
  for (size_t g = 0; g < G_.size(); ++g) {
    UElem b = basis(int(g), v);
    e.overflow = e.overflow || b.overflow;
    for (auto& [k, c] : b.t) acc_term(e.t, k, c);
  }
  return e;
}

UElem UWindow::unit() const { return lattice_monomial(std::vector<long>(G_.n, 0)); }

UElem UWindow::mul(const UElem& x, const UElem& y) const {
  UElem r;
  r.overflow = x.overflow || y.overflow;
  for (const auto& [kx, cx] : x.t)
    for (const auto& [ky, cy] : y.t) {
      if (kx.first != ky.first) continue;
      std::vector<long> sum = vadd(kx.second, ky.second);
      if (!in_window(sum)) { r.overflow = true; continue; }
      Cyclo coeff = cx * cy *
                    Cyclo::phase(qmat_eval(theta_.forms[kx.first], to_zvec(kx.second), to_zvec(ky.second)));
      acc_term(r.t, UKey{kx.first, sum}, coeff);
    }
  prune(r.t);
  return r;
}

UTensor UWindow::comult(const UElem& x) const {
  UTensor r;
  r.overflow = x.overflow;
  for (const auto& [k, c] : x.t) {
    for (size_t ga = 0; ga < G_.size(); ++ga) {
      int gb = G_.mult[G_.inv[ga]][k.first];  // ga * gb = group part of k
      std::vector<long> img = act_long(G_.elems[gb], k.second);
      acc_term(r.t, std::make_pair(UKey{int(ga), img}, UKey{gb, k.second}), c);
    }
  }
  prune(r.t);
  return r;
}

Cyclo UWindow::counit(const UElem& x) const {
  Cyclo acc;
  for (const auto& [k, c] : x.t)
    if (k.first == G_.e) acc += c;
  return acc;
}

UElem UWindow::antipode(const UElem& x) const {
  UElem r;
  r.overflow = x.overflow;
  for (const auto& [k, c] : x.t) {
    std::vector<long> img = vneg(act_long(G_.elems[k.first], k.second));
    Cyclo coeff = c * Cyclo::phase(-qmat_eval(theta_.forms[k.first], to_zvec(k.second), to_zvec(k.second)));
    acc_term(r.t, UKey{G_.inv[k.first], img}, coeff);
  }
  prune(r.t);
  return r;
}

UElem UWindow::star(const UElem& x) const {
  UElem r;
  r.overflow = x.overflow;
  for (const auto& [k, c] : x.t) {
    Cyclo coeff = c.conj() * Cyclo::phase(qmat_eval(theta_.forms[k.first], to_zvec(k.second), to_zvec(k.second)));
    acc_term(r.t, UKey{k.first, vneg(k.second)}, coeff);
  }
  prune(r.t);
  return r;
}

bool u_elem_eq(const UElem& x, const UElem& y) { return u_sub(x, y).t.empty(); }

UElem u_add(const UElem& x, const UElem& y) {
  UElem r = x;
  r.overflow = x.overflow || y.overflow;
  for (const auto& [k, c] : y.t) acc_term(r.t, k, c);
  prune(r.t);
  return r;
}

UElem u_sub(const UElem& x, const UElem& y) {
  UElem r = x;
  r.overflow = x.overflow || y.overflow;
  for (const auto& [k, c] : y.t) acc_term(r.t, k, -c);
  prune(r.t);
  return r;
}

namespace {

// Shift-operator model state space.
using RepState = std::tuple<long, long, int>;  // (n, m, sector)
using RepVec = std::map<RepState, Cyclo>;

struct RepModel {
  int N;
  long D;
  Cyclo q;
  bool ok(long n, long m) const { return std::abs(n) <= D && std::abs(m) <= D; }

  RepVec applyU(const RepState& s, bool* out) const {
    auto [n, m, sec] = s;
    if (!ok(n + 1, m)) { *out = true; return {}; }
    return {{{n + 1, m, sec}, Cyclo::one()}};
  }
  RepVec applyUstar(const RepState& s, bool* out) const {
    auto [n, m, sec] = s;
    if (!ok(n - 1, m)) { *out = true; return {}; }
    return {{{n - 1, m, sec}, Cyclo::one()}};
  }
  RepVec applyV(const RepState& s, bool* out) const {
    auto [n, m, sec] = s;
    if (!ok(n, m + 1)) { *out = true; return {}; }
    Cyclo c = sec == 1 ? q.pow(n) : Cyclo::one();
    return {{{n, m + 1, sec}, c}};
  }
  RepVec applyVstar(const RepState& s, bool* out) const {
    auto [n, m, sec] = s;
    if (!ok(n, m - 1)) { *out = true; return {}; }
    Cyclo c = sec == 1 ? q.pow(-n) : Cyclo::one();
    return {{{n, m - 1, sec}, c}};
  }
  RepVec applyP(const RepState& s, int sector, bool*) const {
    auto [n, m, sec] = s;
    if (sec != sector) return {};
    return {{s, Cyclo::one()}};
  }
};

using RepOp = std::function<RepVec(const RepState&, bool*)>;

RepVec apply_chain(const std::vector<RepOp>& ops, const RepState& s, bool* out) {
  RepVec cur{{s, Cyclo::one()}};
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    RepVec next;
    for (const auto& [st, c] : cur) {
      bool o = false;
      RepVec img = (*it)(st, &o);
      if (o) { *out = true; return {}; }
      for (const auto& [st2, c2] : img) {
        auto f = next.find(st2);
        if (f == next.end()) next.emplace(st2, c * c2);
        else f->second += c * c2;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

bool rep_vec_eq(const RepVec& a, const RepVec& b) {
  RepVec d = a;
  for (const auto& [k, c] : b) {
    auto it = d.find(k);
    if (it == d.end()) d.emplace(k, -c);
    else it->second -= c;
  }
  for (const auto& [k, c] : d)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace

AxiomReport verify_rep_window(int N, long D) {
  AxiomReport rep;
  rep.subject = "rep-window N=" + std::to_string(N) + " D=" + std::to_string(D);
  RepModel M{N, D, Cyclo::zeta(N, 1)};
  RepOp U = [&M](const RepState& s, bool* o) { return M.applyU(s, o); };
  RepOp Us = [&M](const RepState& s, bool* o) { return M.applyUstar(s, o); };
  RepOp V = [&M](const RepState& s, bool* o) { return M.applyV(s, o); };
  RepOp Vs = [&M](const RepState& s, bool* o) { return M.applyVstar(s, o); };
  RepOp Pp = [&M](const RepState& s, bool* o) { return M.applyP(s, 0, o); };
  RepOp Pm = [&M](const RepState& s, bool* o) { return M.applyP(s, 1, o); };

  auto states = [&]() {
    std::vector<RepState> out;
    for (long n = -D; n <= D; ++n)
      for (long m = -D; m <= D; ++m)
        for (int s = 0; s < 2; ++s) out.push_back({n, m, s});
    return out;
  }();

  auto run_check = [&](const std::string& name,
                       const std::function<bool(const RepState&, bool*)>& item) {
    AxiomCheck c;
    c.axiom = name;
    long applicable = 0;
    for (const auto& s : states) {
      bool skip = false;
      bool pass = item(s, &skip);
      if (skip) continue;
      ++applicable;
      if (!pass) {
        c.pass = false;
        ++c.fail_count;
        if (c.witness.is_null()) {
          Json w;
          w["state"] =
              Json::array({std::get<0>(s), std::get<1>(s), std::get<2>(s) == 0 ? "+" : "-"});
          c.witness = w;
          c.residual = 1.0;
        }
      }
    }
    if (applicable == 0) {
      c.pass = false;
      c.witness = Json{{"defect", "window too small, no applicable states"}};
    }
    rep.checks.push_back(c);
  };

  run_check("projections", [&](const RepState& s, bool* skip) {
    RepVec sum = apply_chain({Pp}, s, skip);
    RepVec sm = apply_chain({Pm}, s, skip);
    for (const auto& [k, c] : sm) {
      auto it = sum.find(k);
      if (it == sum.end()) sum.emplace(k, c);
      else it->second += c;
    }
    RepVec idv{{s, Cyclo::one()}};
    return rep_vec_eq(sum, idv) && rep_vec_eq(apply_chain({Pp, Pp}, s, skip), apply_chain({Pp}, s, skip)) &&
           rep_vec_eq(apply_chain({Pp, Pm}, s, skip), RepVec{});
  });

  run_check("projection_commutation", [&](const RepState& s, bool* skip) {
    return rep_vec_eq(apply_chain({U, Pp}, s, skip), apply_chain({Pp, U}, s, skip)) &&
           rep_vec_eq(apply_chain({V, Pm}, s, skip), apply_chain({Pm, V}, s, skip));
  });

  run_check("exchange_relation", [&](const RepState& s, bool* skip) {
    RepVec lhs = apply_chain({V, U}, s, skip);
    RepVec r1 = apply_chain({Pp, U, V}, s, skip);
    RepVec r2 = apply_chain({Pm, U, V}, s, skip);
    if (*skip) return true;
    RepVec rhs = r1;
    Cyclo q = M.q;
    for (const auto& [k, c] : r2) {
      Cyclo add = q * c;
      auto it = rhs.find(k);
      if (it == rhs.end()) rhs.emplace(k, add);
      else it->second += add;
    }
    return rep_vec_eq(lhs, rhs);
  });

  run_check("minus_sector_exchange", [&](const RepState& s, bool* skip) {
    if (std::get<2>(s) != 1) { *skip = true; return true; }
    RepVec lhs = apply_chain({V, U}, s, skip);
    RepVec uv = apply_chain({U, V}, s, skip);
    if (*skip) return true;
    RepVec rhs;
    for (const auto& [k, c] : uv) rhs.emplace(k, M.q * c);
    return rep_vec_eq(lhs, rhs);
  });

  run_check("u_unitary", [&](const RepState& s, bool* skip) {
    RepVec idv{{s, Cyclo::one()}};
    return rep_vec_eq(apply_chain({Us, U}, s, skip), idv) &&
           rep_vec_eq(apply_chain({U, Us}, s, skip), idv);
  });

  run_check("v_unitary", [&](const RepState& s, bool* skip) {
    RepVec idv{{s, Cyclo::one()}};
    return rep_vec_eq(apply_chain({Vs, V}, s, skip), idv) &&
           rep_vec_eq(apply_chain({V, Vs}, s, skip), idv);
  });

  run_check("group_like_exchange", [&](const RepState& s, bool* skip) {
    RepVec comm = apply_chain({V, U, Vs, Us}, s, skip);
    RepVec pm = apply_chain({Pm}, s, skip);
    RepVec pp = apply_chain({Pp}, s, skip);
    if (*skip) return true;
    Cyclo q = M.q;
    // comm - id == (q - 1) Pm  and  comm - q id == (1 - q) Pp
    RepVec d1 = comm, d2 = comm;
    auto subst = [](RepVec& v, const RepState& st, const Cyclo& c) {
      auto it = v.find(st);
      if (it == v.end()) v.emplace(st, -c);
      else it->second -= c;
    };
    subst(d1, s, Cyclo::one());
    subst(d2, s, q);
    RepVec w1, w2;
    for (const auto& [k, c] : pm) w1.emplace(k, (q - Cyclo::one()) * c);
    for (const auto& [k, c] : pp) w2.emplace(k, (Cyclo::one() - q) * c);
    return rep_vec_eq(d1, w1) && rep_vec_eq(d2, w2);
  });

  return rep;
}

AxiomReport verify_q1_degeneration(long D) {
  AxiomReport rep;
  rep.subject = "q1-degeneration D=" + std::to_string(D);
  DTWindow W(1, D);
  std::vector<DTKey> keys;
  for (int s = 0; s < 2; ++s)
    for (long a = -D; a <= D; ++a)
      for (long b = -D; b <= D; ++b) keys.push_back({s, a, b});

  {
    AxiomCheck c;
    c.axiom = "window_commutative";
    for (const auto& kx : keys) {
      for (const auto& ky : keys) {
        DTElem x = W.basis(kx.s, kx.a, kx.b), y = W.basis(ky.s, ky.a, ky.b);
        DTElem xy = W.mul(x, y), yx = W.mul(y, x);
        if (xy.overflow || yx.overflow) continue;
        if (!dt_elem_eq(xy, yx)) {
          c.pass = false;
          ++c.fail_count;
          if (c.witness.is_null()) {
            c.witness = Json{{"x", Json::array({kx.s, kx.a, kx.b})},
                             {"y", Json::array({ky.s, ky.a, ky.b})}};
            c.residual = 1.0;
          }
        }
      }
    }
    rep.checks.push_back(c);
  }

  {
    AxiomCheck c;
    c.axiom = "comult_crossed_pattern";
    for (const auto& k : keys) {
      DTTensor got = W.comult(W.basis(k.s, k.a, k.b));
      // pattern: f_{(a,b,s)} x f_{(a,b,+)} + f_{(b,a,-s)} x f_{(a,b,-)}
      DTTensor want;
      want.t[{DTKey{k.s, k.a, k.b}, DTKey{0, k.a, k.b}}] = Cyclo::one();
      want.t[{DTKey{1 - k.s, k.b, k.a}, DTKey{1, k.a, k.b}}] = Cyclo::one();
      bool same = got.t.size() == want.t.size();
      if (same)
        for (const auto& [kk, cc] : want.t) {
          auto it = got.t.find(kk);
          if (it == got.t.end() || !(it->second == cc)) { same = false; break; }
        }
      if (!same) {
        c.pass = false;
        ++c.fail_count;
        if (c.witness.is_null()) {
          c.witness = Json{{"basis", Json::array({k.s, k.a, k.b})}};
          c.residual = 1.0;
        }
      }
    }
    rep.checks.push_back(c);
  }
  return rep;
}

AxiomReport multiplier_report(const std::string& family, int N, long D, int triples,
                              unsigned long seed) {
  PermGroup Z3 = named_group("Z3", 3);
  CWindow W = family == "dual-c" ? dual_c_window(N, D)
              : family == "z3"
                  ? CWindow(Z3, antisym_z3_family(Z3, mpq_class(1, 4), mpq_class(1, 3)), D)
                  : throw std::invalid_argument("unknown multiplier family: " + family);
  AxiomReport rep;
  rep.subject = "multiplier " + family + " (N=" + std::to_string(N) +
                ", D=" + std::to_string(D) + ")";
  auto ct_eq = [](const CTensor& x, const CTensor& y) {
    if (x.overflow || y.overflow) return false;
    std::map<std::pair<CKey, CKey>, Cyclo> diff = x.t;
    for (const auto& [k, v] : y.t) {
      auto it = diff.find(k);
      if (it == diff.end())
        diff.emplace(k, Cyclo::zero() - v);
      else
        it->second = it->second - v;
    }
    for (const auto& [k, v] : diff)
      if (!v.is_zero()) return false;
    return true;
  };

  std::vector<std::vector<long>> exps;
  if (W.group().n == 2) {
    for (long x = -1; x <= 1; ++x)
      for (long y = -1; y <= 1; ++y) exps.push_back({x, y});
  } else {
    exps = {{0, 0, 0}, {1, 0, -1}, {-1, 1, 0}, {1, 1, 1}};
  }
  int m = int(W.group().elems.size());
  AxiomCheck closed;
  closed.axiom = "closed_forms_vs_windowed_sums";
  for (int ga = 0; ga < m; ++ga)
    for (int gc = 0; gc < m; ++gc)
      for (const auto& ea : exps)
        for (const auto& ec : exps) {
          CKey a{ga, ea};
          CKey c{gc, ec};
          bool ok = ct_eq(W.delta_right(a, c), W.delta_right_brute(a, c)) &&
                    ct_eq(W.delta_left(c, a), W.delta_left_brute(c, a));
          if (!ok) {
            closed.pass = false;
            ++closed.fail_count;
            if (closed.witness.is_null()) {
              closed.witness = Json{{"ga", ga}, {"gc", gc}};
              closed.residual = 1.0;
            }
          }
        }
  rep.checks.push_back(closed);

  AxiomCheck co;
  co.axiom = "coassociativity_random_triples";
  std::mt19937_64 gen(seed);
  int n = W.group().n;
  auto draw = [&]() {
    std::vector<long> v(size_t(n), 0L);
    for (auto& x : v) x = long(gen() % 5) - 2;
    int g = int(gen() % (unsigned long)m);
    return CKey{g, v};
  };
  int done = 0;
  long skipped = 0;
  for (long attempts = 0; done < triples && attempts < 20L * triples + 100; ++attempts) {
    CKey a = draw();
    CKey b = draw();
    CKey c = draw();
    bool of = false;
    bool good = W.coassoc_triple(a, b, c, &of);
    if (of) {
      ++skipped;
      continue;
    }
    ++done;
    if (!good) {
      co.pass = false;
      ++co.fail_count;
      if (co.witness.is_null()) {
        co.witness = Json{{"triple_index", done - 1}};
        co.residual = 1.0;
      }
    }
  }
  if (done < triples) {
    co.pass = false;
    co.witness = Json{{"triples_checked", done}, {"requested", triples}};
  }
  rep.checks.push_back(co);
  return rep;
}

Json dt_window_json(int N, long D) {
  DTWindow W(N, D);
  std::vector<DTKey> keys;
  for (int s = 0; s < 2; ++s)
    for (long a = -D; a <= D; ++a)
      for (long b = -D; b <= D; ++b) keys.push_back({s, a, b});
  std::map<DTKey, int> index;
  for (size_t i = 0; i < keys.size(); ++i) index[keys[i]] = int(i);
  auto label = [](const DTKey& k) {
    return std::string("(") + (k.s ? "-" : "+") + "," + std::to_string(k.a) + "," +
           std::to_string(k.b) + ")";
  };
  Json j;
  j["family"] = "dt-window";
  j["N"] = N;
  j["degree"] = D;
  j["q"] = cyclo_to_json(W.q());
  Json labels = Json::array();
  for (const auto& k : keys) labels.push_back(label(k));
  j["labels"] = labels;
  Json unit = dt_elem_json(W.unit());
  j["unit"] = unit;
  Json mult = Json::array();
  long overflow_pairs = 0;
  for (size_t i = 0; i < keys.size(); ++i)
    for (size_t jj = 0; jj < keys.size(); ++jj) {
      DTElem prod = W.mul(W.basis(keys[i].s, keys[i].a, keys[i].b),
                          W.basis(keys[jj].s, keys[jj].a, keys[jj].b));
      if (prod.overflow) { ++overflow_pairs; continue; }
      for (const auto& [k, c] : prod.t)
        mult.push_back(Json::array({int(i), int(jj), index.at(k), cyclo_to_json(c)}));
    }
  j["mult"] = mult;
  j["mult_overflow_pairs"] = overflow_pairs;
  Json comult = Json::array();
  for (size_t i = 0; i < keys.size(); ++i) {
    DTTensor t = W.comult(W.basis(keys[i].s, keys[i].a, keys[i].b));
    for (const auto& [kk, c] : t.t)
      comult.push_back(Json::array({int(i), index.at(kk.first), index.at(kk.second), cyclo_to_json(c)}));
  }
  j["comult"] = comult;
  Json counit = Json::array();
  for (const auto& k : keys)
    counit.push_back(cyclo_to_json(W.counit(W.basis(k.s, k.a, k.b))));
  j["counit"] = counit;
  Json antipode = Json::array();
  Json star = Json::array();
  for (size_t i = 0; i < keys.size(); ++i) {
    DTElem sv = W.antipode(W.basis(keys[i].s, keys[i].a, keys[i].b));
    for (const auto& [k, c] : sv.t) antipode.push_back(Json::array({int(i), index.at(k), cyclo_to_json(c)}));
    DTElem st = W.star(W.basis(keys[i].s, keys[i].a, keys[i].b));
    for (const auto& [k, c] : st.t) star.push_back(Json::array({int(i), index.at(k), cyclo_to_json(c)}));
  }
  j["antipode"] = antipode;
  j["star"] = star;
  return j;
}

}  // namespace qmt
