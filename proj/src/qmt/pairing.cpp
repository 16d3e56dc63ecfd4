#include "qmt/pairing.hpp"

#include <algorithm>
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

// Expands Delta(v) into a sparse (j, k) -> coefficient map.
std::map<std::pair<int, int>, Cyclo> comult_map(const Presentation& P, const Vec& v) {
  std::map<std::pair<int, int>, Cyclo> m;
  for (int i = 0; i < P.dim; ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& t : P.comult[i]) {
      auto it = m.find({t.j, t.k});
      if (it == m.end()) m.emplace(std::make_pair(t.j, t.k), v[i] * t.c);
      else it->second += v[i] * t.c;
    }
  }
  for (auto it = m.begin(); it != m.end();) {
    if (it->second.is_zero()) it = m.erase(it);
    else ++it;
  }
  return m;
}

bool is_grouplike(const Presentation& P, const Vec& g) {
  if (!(counit_of(P, g) == Cyclo::one())) return false;
  auto dm = comult_map(P, g);
  for (int j = 0; j < P.dim; ++j)
    for (int k = 0; k < P.dim; ++k) {
      Cyclo want = g[j] * g[k];
      auto it = dm.find({j, k});
      Cyclo got = it == dm.end() ? Cyclo::zero() : it->second;
      if (!(want == got)) return false;
    }
  return true;
}

int vec_find(const std::vector<Vec>& set, const Vec& v) {
  for (size_t i = 0; i < set.size(); ++i)
    if (vec_eq(set[i], v)) return int(i);
  return -1;
}

// Validates one character candidate by a full multiplicative scan.
bool character_scan(const Presentation& P, const Vec& chi) {
  Cyclo on_unit;
  for (int i = 0; i < P.dim; ++i) on_unit += P.unit[i] * chi[i];
  if (!(on_unit == Cyclo::one())) return false;
  for (int i = 0; i < P.dim; ++i)
    for (int j = 0; j < P.dim; ++j) {
      Cyclo lhs;
      for (const auto& t : P.product(i, j)) lhs += t.c * chi[t.k];
      if (!(lhs == chi[i] * chi[j])) return false;
    }
  return true;
}

}  // namespace

Pairing canonical_kpw_pairing(int N) {
  Cyclo r = half_power(N);
  Pairing pr;
  pr.M = Mat<Cyclo>(2 * N * N, 2 * N * N);
  for (int s = 0; s < 2; ++s)
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        int i = kp_index(N, s, a, b);  // same layout on both sides
        pr.M.at(i, i) = s == 0 ? Cyclo::one() : r.pow(long(-a) * b);
      }
  return pr;
}

Pairing kronecker_pairing(int dim) {
  Pairing pr;
  pr.M = Mat<Cyclo>::identity(dim);
  return pr;
}

AxiomReport verify_pairing(const Presentation& F, const Presentation& A, const Pairing& pr) {
  AxiomReport rep;
  rep.subject = "pairing " + F.meta.name + " x " + A.meta.name;
  if (pr.M.rows != F.dim || pr.M.cols != A.dim)
    throw std::invalid_argument("pairing matrix shape does not match the presentations");
  int dF = F.dim, dA = A.dim;

  {
    AxiomCheck c;
    c.axiom = "mult_vs_comult";  // <ab, x> = <a x b, Delta x>
    for (int a = 0; a < dF; ++a)
      for (int b = 0; b < dF; ++b)
        for (int x = 0; x < dA; ++x) {
          Cyclo lhs;
          for (const auto& t : F.product(a, b)) lhs += t.c * pr.M.at(t.k, x);
          Cyclo rhs;
          for (const auto& t : A.comult[x]) rhs += pr.M.at(a, t.j) * pr.M.at(b, t.k) * t.c;
          if (!(lhs == rhs)) push_fail(c, Json{{"a", F.labels[a]}, {"b", F.labels[b]}, {"x", A.labels[x]}});
        }
    rep.checks.push_back(c);
  }

  {
    AxiomCheck c;
    c.axiom = "comult_vs_mult";  // <Delta a, x x y> = <a, xy>
    for (int a = 0; a < dF; ++a)
      for (int x = 0; x < dA; ++x)
        for (int y = 0; y < dA; ++y) {
          Cyclo lhs;
          for (const auto& t : F.comult[a]) lhs += t.c * pr.M.at(t.j, x) * pr.M.at(t.k, y);
          Cyclo rhs;
          for (const auto& t : A.product(x, y)) rhs += pr.M.at(a, t.k) * t.c;
          if (!(lhs == rhs)) push_fail(c, Json{{"a", F.labels[a]}, {"x", A.labels[x]}, {"y", A.labels[y]}});
        }
    rep.checks.push_back(c);
  }

  {
    AxiomCheck c;
    c.axiom = "unit_vs_counit";  // <1, x> = eps(x)
    for (int x = 0; x < dA; ++x) {
      Cyclo lhs;
      for (int a = 0; a < dF; ++a)
        if (!F.unit[a].is_zero()) lhs += F.unit[a] * pr.M.at(a, x);
      if (!(lhs == A.counit[x])) push_fail(c, Json{{"x", A.labels[x]}});
    }
    rep.checks.push_back(c);
  }

  {
    AxiomCheck c;
    c.axiom = "counit_vs_unit";  // eps(a) = <a, 1>
    for (int a = 0; a < dF; ++a) {
      Cyclo rhs;
      for (int x = 0; x < dA; ++x)
        if (!A.unit[x].is_zero()) rhs += pr.M.at(a, x) * A.unit[x];
      if (!(F.counit[a] == rhs)) push_fail(c, Json{{"a", F.labels[a]}});
    }
    rep.checks.push_back(c);
  }

  {
    AxiomCheck c;
    c.axiom = "antipode_transpose";  // <Sa, x> = <a, Sx>
    for (int a = 0; a < dF; ++a)
      for (int x = 0; x < dA; ++x) {
        Cyclo lhs;
        for (const auto& t : F.antipode[a]) lhs += t.c * pr.M.at(t.k, x);
        Cyclo rhs;
        for (const auto& t : A.antipode[x]) rhs += pr.M.at(a, t.k) * t.c;
        if (!(lhs == rhs)) push_fail(c, Json{{"a", F.labels[a]}, {"x", A.labels[x]}});
      }
    rep.checks.push_back(c);
  }

  {
    AxiomCheck c;
    c.axiom = "star_compatibility";  // <a*, x> = conj <a, (Sx)*>
    for (int a = 0; a < dF; ++a)
      for (int x = 0; x < dA; ++x) {
        Cyclo lhs;
        for (const auto& t : F.star[a]) lhs += t.c * pr.M.at(t.k, x);
        Vec sx = apply_linear(A.antipode, basis_vec(dA, x));
        Vec ssx = apply_antilinear(A.star, sx);
        Cyclo rhs;
        for (int k = 0; k < dA; ++k)
          if (!ssx[k].is_zero()) rhs += pr.M.at(a, k) * ssx[k];
        if (!(lhs == rhs.conj())) push_fail(c, Json{{"a", F.labels[a]}, {"x", A.labels[x]}});
      }
    rep.checks.push_back(c);
  }

  {
    AxiomCheck c;
    c.axiom = "nondegenerate";
    int r = rank_of(pr.M);
    if (r != dA || dF != dA) {
      push_fail(c, Json{{"rank", r}, {"dim", dA}});
    }
    rep.checks.push_back(c);
  }

  return rep;
}

AxiomReport named_pairing_report(const std::string& rule, int N) {
  if (rule == "canonical-kpw")
    return verify_pairing(build_dual_w(N), build_kp(N), canonical_kpw_pairing(N));
  if (rule == "kronecker") {
    PermGroup G = named_group("Z3", 3);
    CocycleFamily theta = t1_family(G, 1, 2, N);
    Lattice L = Lattice::scaled(3, N);
    Presentation wsub = build_w_subalgebra(G, theta, L);
    Presentation fib = build_fibration(G, theta, L);
    return verify_pairing(wsub, fib, kronecker_pairing(fib.dim));
  }
  if (rule == "group-function") {
    PermGroup G = named_group("Z" + std::to_string(N), N);
    return verify_pairing(build_function_algebra(G), build_group_algebra(G),
                          kronecker_pairing(int(G.size())));
  }
  throw std::invalid_argument("unknown pairing rule: " + rule);
}

std::vector<Vec> kp_characters(int N) {
  // Restricted to the plus sector (a group algebra) a character is a group
  // character; the vanishing cross products then force zero on the minus
  // sector because plus values are roots of unity.
  Cyclo q = Cyclo::zeta(N, 1);
  std::vector<Vec> out;
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) {
      Vec chi = vec_zero(2 * N * N);
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
          chi[kp_index(N, 0, a, b)] = q.pow(long(u) * a + long(v) * b);
      out.push_back(chi);
    }
  return out;
}

std::vector<Vec> w_characters(int N) {
  // The plus sector is spanned by orthogonal idempotents summing to one, so a
  // character picks a single support cell (m0, n0); the minus value z there
  // satisfies z^2 = [m0 = n0], and the full scan removes every off-diagonal
  // support.  Survivors: diagonal cells with z = +-1.
  Presentation W = build_dual_w(N);
  std::vector<Vec> out;
  for (int m0 = 0; m0 < N; ++m0)
    for (int n0 = 0; n0 < N; ++n0) {
      std::vector<Cyclo> zs;
      if (m0 == n0) {
        zs.push_back(Cyclo::one());
        zs.push_back(-Cyclo::one());
      } else {
        zs.push_back(Cyclo::zero());
      }
      for (const Cyclo& z : zs) {
        Vec chi = vec_zero(2 * N * N);
        chi[kp_index(N, 0, m0, n0)] = Cyclo::one();
        chi[kp_index(N, 1, m0, n0)] = z;
        if (character_scan(W, chi)) out.push_back(chi);
      }
    }
  return out;
}

AxiomReport grouplike_report(int N) {
  AxiomReport rep;
  rep.subject = "grouplikes N=" + std::to_string(N);
  Presentation A = build_kp(N);
  Presentation W = build_dual_w(N);
  Pairing pr = canonical_kpw_pairing(N);

  std::vector<Vec> chis_a = kp_characters(N);
  {
    AxiomCheck c;
    c.axiom = "kp_characters";
    for (size_t i = 0; i < chis_a.size(); ++i) {
      if (!character_scan(A, chis_a[i])) push_fail(c, Json{{"index", i}});
      for (size_t j = 0; j < i; ++j)
        if (vec_eq(chis_a[i], chis_a[j])) push_fail(c, Json{{"duplicate", Json::array({j, i})}});
    }
    if (chis_a.size() != size_t(N) * N) push_fail(c, Json{{"count", chis_a.size()}});
    rep.checks.push_back(c);
  }

  std::vector<Vec> chis_w = w_characters(N);
  {
    AxiomCheck c;
    c.axiom = "w_characters";
    for (size_t i = 0; i < chis_w.size(); ++i) {
      if (!character_scan(W, chis_w[i])) push_fail(c, Json{{"index", i}});
      for (size_t j = 0; j < i; ++j)
        if (vec_eq(chis_w[i], chis_w[j])) push_fail(c, Json{{"duplicate", Json::array({j, i})}});
    }
    if (chis_w.size() != size_t(2) * N) push_fail(c, Json{{"count", chis_w.size()}});
    rep.checks.push_back(c);
  }

  // Characters of the dual side solve to grouplikes across the pairing.
  auto solve_grouplikes = [&](const std::vector<Vec>& chis, bool transpose) {
    std::vector<Vec> out;
    Mat<Cyclo> M = pr.M;
    if (transpose) {
      M = Mat<Cyclo>(pr.M.cols, pr.M.rows);
      for (int i = 0; i < pr.M.rows; ++i)
        for (int j = 0; j < pr.M.cols; ++j) M.at(j, i) = pr.M.at(i, j);
    }
    for (const Vec& chi : chis) {
      auto sol = solve(M, chi);
      if (!sol) throw std::logic_error("nondegenerate pairing failed to solve a character");
      out.push_back(*sol);
    }
    return out;
  };

  std::vector<Vec> gl_a = solve_grouplikes(chis_w, false);   // elements of A
  std::vector<Vec> gl_w = solve_grouplikes(chis_a, true);    // elements of W

  auto check_group = [&](const std::string& name, const Presentation& P,
                         const std::vector<Vec>& gl, size_t want) {
    AxiomCheck c;
    c.axiom = name;
    for (size_t i = 0; i < gl.size(); ++i) {
      if (!is_grouplike(P, gl[i])) push_fail(c, Json{{"index", i}});
      for (size_t j = 0; j < i; ++j)
        if (vec_eq(gl[i], gl[j])) push_fail(c, Json{{"duplicate", Json::array({j, i})}});
    }
    for (size_t i = 0; i < gl.size(); ++i)
      for (size_t j = 0; j < gl.size(); ++j)
        if (vec_find(gl, mul_vec(P, gl[i], gl[j])) < 0)
          push_fail(c, Json{{"product_escapes", Json::array({i, j})}});
    if (gl.size() != want) push_fail(c, Json{{"count", gl.size()}, {"expected", want}});
    rep.checks.push_back(c);
  };

  check_group("kp_grouplikes", A, gl_a, size_t(2) * N);
  check_group("w_grouplikes", W, gl_w, size_t(N) * N);

  if (N >= 3) {
    AxiomCheck c;
    c.axiom = "grouplike_counts_distinguish";
    if (gl_a.size() == gl_w.size())
      push_fail(c, Json{{"count", gl_a.size()}});
    rep.checks.push_back(c);
  }
  return rep;
}

Json SelfDuality::to_json() const {
  Json j;
  j["N"] = N;
  j["found"] = found;
  if (found) {
    j["grouplike_permutation"] = perm;
    j["shape"] = shape;
    j["scale"] = cyclo_to_json(c);
    Json rows = Json::array();
    for (int i = 0; i < f.rows; ++i) {
      Json row = Json::array();
      for (int k = 0; k < f.cols; ++k) row.push_back(cyclo_to_json(f.at(i, k)));
      rows.push_back(row);
    }
    j["matrix"] = rows;
    j["checks"] = checks.to_json();
  } else {
    j["reason"] = reason;
  }
  return j;
}

SelfDuality self_duality_search(int N) {
  SelfDuality res;
  res.N = N;
  if (N != 2) {
    size_t a = 2 * size_t(N), w = size_t(N) * N;
    if (a != w) {
      res.found = false;
      res.reason = "grouplike group orders differ: " + std::to_string(a) + " vs " +
                   std::to_string(w) + ", so no isomorphism exists";
      return res;
    }
    throw std::invalid_argument("self-duality search supports N = 2 and the count obstruction");
  }

  Presentation A = build_kp(2);
  Presentation W = build_dual_w(2);
  Cyclo r = half_power(2);  // zeta_4

  // Grouplikes of A in solver order: 1, the sign twist, and the two diagonal
  // twists; grouplikes of W indexed by the plus-sector group characters.
  std::vector<Vec> ga;
  for (int m = 0; m < 2; ++m)
    for (int tau = 0; tau < 2; ++tau) {
      Vec g = vec_zero(8);
      g[kp_index(2, 0, m, m)] = Cyclo::one();
      g[kp_index(2, 1, m, m)] = (tau == 0 ? Cyclo::one() : -Cyclo::one()) * r.pow(long(m) * m);
      ga.push_back(g);
    }
  std::vector<Vec> gw;
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v) {
      Vec h = vec_zero(8);
      for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n)
          h[kp_index(2, 0, m, n)] =
              (u * m + v * n) % 2 == 0 ? Cyclo::one() : -Cyclo::one();
      gw.push_back(h);
    }
  for (const Vec& g : ga)
    if (!is_grouplike(A, g)) throw std::logic_error("compact-side grouplike list invalid");
  for (const Vec& h : gw)
    if (!is_grouplike(W, h)) throw std::logic_error("dual-side grouplike list invalid");

  // Comatrix block on the compact side and its dual-side image candidates.
  int E11 = kp_index(2, 0, 0, 1), E12 = kp_index(2, 1, 1, 0);
  int E21 = kp_index(2, 1, 0, 1), E22 = kp_index(2, 0, 1, 0);
  Mat<Cyclo> sx(2, 2), sy(2, 2);
  sx.at(0, 1) = Cyclo::one();
  sx.at(1, 0) = Cyclo::one();
  sy.at(0, 1) = -r;  // r = i here
  sy.at(1, 0) = r;
  Vec F[2][2] = {{vec_zero(8), vec_zero(8)}, {vec_zero(8), vec_zero(8)}};
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n) {
      Mat<Cyclo> pi = Mat<Cyclo>::identity(2);
      for (int t = 0; t < m; ++t) pi = mat_mul(pi, sx);
      for (int t = 0; t < n; ++t) pi = mat_mul(pi, sy);
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
          F[s][t][kp_index(2, 1, m, n)] += r.pow(long(m) * n) * pi.at(s, t);
    }

  Mat<Cyclo> basis(8, 8);
  int e_idx[4] = {E11, E12, E21, E22};
  for (int colv = 0; colv < 4; ++colv)
    for (int rrow = 0; rrow < 8; ++rrow) basis.at(rrow, colv) = ga[colv][rrow];
  for (int colv = 0; colv < 4; ++colv) basis.at(e_idx[colv], 4 + colv) = Cyclo::one();
  auto toC = inverse(basis);
  if (!toC) throw std::logic_error("grouplike and comatrix columns must form a basis");

  // Scale equation from the antipode: f(S E12) = S f(E12) with S E12 = E21.
  auto constant_ratio = [](const Vec& num, const Vec& den) -> std::optional<Cyclo> {
    std::optional<Cyclo> ratio;
    for (size_t k = 0; k < num.size(); ++k) {
      bool nz_n = !num[k].is_zero(), nz_d = !den[k].is_zero();
      if (nz_n != nz_d) return std::nullopt;
      if (!nz_n) continue;
      Cyclo q = num[k] * den[k].inv();
      if (!ratio) ratio = q;
      else if (!(*ratio == q)) return std::nullopt;
    }
    return ratio;
  };

  auto roots_of = [](const Cyclo& c2) {
    std::vector<Cyclo> roots;
    Cyclo z = c2.compress();
    int M = 2 * z.modulus();
    for (int k = 0; k < M; ++k) {
      Cyclo cand = Cyclo::zeta(M, k);
      if (cand * cand == z) roots.push_back(cand);
    }
    return roots;
  };

  std::vector<std::vector<int>> perms;
  {
    std::vector<int> tail{1, 2, 3};
    do {
      perms.push_back({0, tail[0], tail[1], tail[2]});
    } while (std::next_permutation(tail.begin(), tail.end()));
  }

  MorphismOptions opt;
  opt.invertible = true;
  for (const auto& p : perms) {
    for (int shape = 0; shape < 2; ++shape) {
      // diagonal: E12 -> c F01, E21 -> F10 / c; antidiagonal swaps the images.
      const Vec& img12 = shape == 0 ? F[0][1] : F[1][0];
      const Vec& img21 = shape == 0 ? F[1][0] : F[0][1];
      std::optional<Cyclo> c2 = constant_ratio(img21, apply_linear(W.antipode, img12));
      if (!c2) continue;
      for (const Cyclo& c : roots_of(*c2)) {
        Mat<Cyclo> img(8, 8);
        for (int colv = 0; colv < 4; ++colv)
          for (int rrow = 0; rrow < 8; ++rrow) img.at(rrow, colv) = gw[p[colv]][rrow];
        Cyclo cinv = c.inv();
        for (int rrow = 0; rrow < 8; ++rrow) {
          img.at(rrow, 4) = shape == 0 ? F[0][0][rrow] : F[1][1][rrow];
          img.at(rrow, 5) = c * img12[rrow];
          img.at(rrow, 6) = cinv * img21[rrow];
          img.at(rrow, 7) = shape == 0 ? F[1][1][rrow] : F[0][0][rrow];
        }
        Mat<Cyclo> f = mat_mul(img, *toC);
        AxiomReport check = verify_morphism("self-duality", A, W, f, opt);
        if (check.all_pass()) {
          res.found = true;
          res.perm = p;
          res.shape = shape == 0 ? "diagonal" : "antidiagonal";
          res.c = c;
          res.f = f;
          res.checks = check;
          return res;
        }
      }
    }
  }
  res.found = false;
  res.reason = "no candidate over grouplike correspondences, comatrix shapes and scale roots passed";
  return res;
}

}  // namespace qmt
