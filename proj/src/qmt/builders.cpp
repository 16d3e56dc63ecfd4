#include "qmt/builders.hpp"

#include <stdexcept>

namespace qmt {

namespace {

int mod(long a, long N) { return int(((a % N) + N) % N); }

std::string kp_label(int minus, int a, int b) {
  return std::string("(") + (minus ? "-" : "+") + "," + std::to_string(a) + "," +
         std::to_string(b) + ")";
}

std::string w_label(int minus, int m, int n) {
  return std::string("(w") + (minus ? "-" : "+") + "," + std::to_string(m) + "," +
         std::to_string(n) + ")";
}

}  // namespace

Cyclo half_power(int N) {
  if (N % 2 == 0) return Cyclo::zeta(2 * N, 1);
  return Cyclo::zeta(N, (N + 1) / 2);
}

int kp_index(int N, int minus, int a, int b) { return minus * N * N + a * N + b; }

Presentation build_kp(int N) {
  if (N < 2) throw std::invalid_argument("kp requires N >= 2");
  Presentation P;
  P.dim = 2 * N * N;
  Cyclo q = Cyclo::zeta(N, 1);
  P.labels.resize(P.dim);
  for (int s = 0; s < 2; ++s)
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) P.labels[kp_index(N, s, a, b)] = kp_label(s, a, b);
  P.unit = vec_zero(P.dim);
  P.unit[kp_index(N, 0, 0, 0)] = Cyclo::one();
  P.unit[kp_index(N, 1, 0, 0)] = Cyclo::one();
  P.counit = vec_zero(P.dim);
  P.mult.assign(size_t(P.dim) * P.dim, {});
  P.comult.assign(P.dim, {});
  P.antipode.assign(P.dim, {});
  P.star.assign(P.dim, {});
  for (int s = 0; s < 2; ++s)
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        int i = kp_index(N, s, a, b);
        P.counit[i] = s == 0 ? Cyclo::one() : Cyclo::zero();
        // products stay within a sector
        for (int c = 0; c < N; ++c)
          for (int e = 0; e < N; ++e) {
            int j = kp_index(N, s, c, e);
            Cyclo coeff = s == 0 ? Cyclo::one() : q.pow(long(b) * c);
            P.mult[size_t(i) * P.dim + j].push_back(
                {kp_index(N, s, mod(a + c, N), mod(b + e, N)), coeff});
          }
        if (s == 0) {
          P.comult[i].push_back({i, i, Cyclo::one()});
          P.comult[i].push_back({kp_index(N, 1, b, a), kp_index(N, 1, a, b), q.pow(long(a) * b)});
          P.antipode[i].push_back({kp_index(N, 0, mod(-a, N), mod(-b, N)), Cyclo::one()});
          P.star[i].push_back({kp_index(N, 0, mod(-a, N), mod(-b, N)), Cyclo::one()});
        } else {
          P.comult[i].push_back({i, kp_index(N, 0, a, b), Cyclo::one()});
          P.comult[i].push_back({kp_index(N, 0, b, a), i, Cyclo::one()});
          P.antipode[i].push_back({kp_index(N, 1, mod(-b, N), mod(-a, N)), Cyclo::one()});
          P.star[i].push_back({kp_index(N, 1, mod(-a, N), mod(-b, N)), q.pow(long(a) * b)});
        }
      }
  P.meta.name = "kp";
  P.meta.params["N"] = N;
  for (int s = 0; s < 2; ++s) {
    P.meta.generator_indices.push_back(kp_index(N, s, 1 % N, 0));
    P.meta.generator_indices.push_back(kp_index(N, s, 0, 1 % N));
    P.meta.generator_indices.push_back(kp_index(N, s, 0, 0));
  }
  P.normalize();
  return P;
}

Presentation build_dual_w(int N) {
  if (N < 2) throw std::invalid_argument("dual-w requires N >= 2");
  Presentation P;
  P.dim = 2 * N * N;
  Cyclo q = Cyclo::zeta(N, 1);
  Cyclo r = half_power(N);
  auto ix = [N](int s, int m, int n) { return s * N * N + m * N + n; };
  P.labels.resize(P.dim);
  for (int s = 0; s < 2; ++s)
    for (int m = 0; m < N; ++m)
      for (int n = 0; n < N; ++n) P.labels[ix(s, m, n)] = w_label(s, m, n);
  P.unit = vec_zero(P.dim);
  for (int m = 0; m < N; ++m)
    for (int n = 0; n < N; ++n) P.unit[ix(0, m, n)] = Cyclo::one();
  P.counit = vec_zero(P.dim);
  P.mult.assign(size_t(P.dim) * P.dim, {});
  P.comult.assign(P.dim, {});
  P.antipode.assign(P.dim, {});
  P.star.assign(P.dim, {});
  for (int s = 0; s < 2; ++s)
    for (int k = 0; k < N; ++k)
      for (int l = 0; l < N; ++l) {
        int i = ix(s, k, l);
        P.counit[i] = (k == 0 && l == 0) ? Cyclo::one() : Cyclo::zero();
        for (int t = 0; t < 2; ++t)
          for (int m = 0; m < N; ++m)
            for (int n = 0; n < N; ++n) {
              int j = ix(t, m, n);
              // delta pattern: transposed when the right factor is a minus element
              bool fire = (t == 1) ? (k == n && l == m) : (k == m && l == n);
              if (!fire) continue;
              int out_s = (s + t) % 2;
              P.mult[size_t(i) * P.dim + j].push_back({ix(out_s, m, n), Cyclo::one()});
            }
        if (s == 0) {
          for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
              int c = mod(k - a, N), e = mod(l - b, N);
              P.comult[i].push_back({ix(0, a, b), ix(0, c, e), Cyclo::one()});
            }
          P.antipode[i].push_back({ix(0, mod(-k, N), mod(-l, N)), Cyclo::one()});
          P.star[i].push_back({i, Cyclo::one()});
        } else {
          for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
              int c = mod(k - a, N), e = mod(l - b, N);
              // beta^{ab,ce} = q^{bc} r^{ab + ce - kl}
              Cyclo coeff = q.pow(long(b) * c) * r.pow(long(a) * b + long(c) * e - long(k) * l);
              P.comult[i].push_back({ix(1, a, b), ix(1, c, e), coeff});
            }
          int km = mod(-l, N), lm = mod(-k, N);
          P.antipode[i].push_back({ix(1, km, lm), r.pow(long(km) * lm - long(k) * l)});
          P.star[i].push_back({ix(1, l, k), Cyclo::one()});
        }
      }
  P.meta.name = "dual-w";
  P.meta.params["N"] = N;
  P.normalize();
  return P;
}

CocycleFamily flip_family(const PermGroup& Z2, const mpq_class& t) {
  QMat m = qmat_zero(2);
  m[0][1] = t;
  m[1][0] = -t;
  return family_from_generator_forms(Z2, {m});
}

CocycleFamily t1_family(const PermGroup& Z3, const mpq_class& a, const mpq_class& b, long N) {
  QMat m = qmat_zero(3);
  m[0][1] = mpq_class(a) / N;
  m[1][2] = mpq_class(b - a) / N;
  m[2][0] = mpq_class(-b) / N;
  return family_from_generator_forms(Z3, {m});
}

CocycleFamily antisym_z3_family(const PermGroup& Z3, const mpq_class& theta, const mpq_class& rho) {
  QMat m = qmat_zero(3);
  m[0][1] = theta;
  m[0][2] = -rho;
  m[1][0] = -theta;
  m[1][2] = -(theta + rho);
  m[2][0] = rho;
  m[2][1] = theta + rho;
  return family_from_generator_forms(Z3, {m});
}

namespace {

void fibration_preflight(const PermGroup& G, const CocycleFamily& theta, const Lattice& L) {
  if (theta.n != G.n || L.rank() != G.n)
    throw std::invalid_argument("group, cocycle and lattice ranks disagree");
  if (auto w = cocycle_defect(theta))
    throw std::invalid_argument("cocycle condition fails at pair (" +
                                perm_str(theta.G.elems[w->g]) + ", " +
                                perm_str(theta.G.elems[w->h]) + ")");
  for (size_t g = 0; g < G.size(); ++g)
    if (!L.invariant_under(G.elems[g]))
      throw std::invalid_argument("lattice is not invariant under group element " +
                                  perm_str(G.elems[g]));
  // Integral pairing with the lattice on both sides keeps all phases well
  // defined on representatives.
  for (size_t g = 0; g < G.size(); ++g)
    for (int k = 0; k < G.n; ++k) {
      ZVec lam = L.basis_vector(k);
      for (int j = 0; j < G.n; ++j) {
        ZVec ej(G.n, mpz_class(0));
        ej[j] = 1;
        mpq_class left = qmat_eval(theta.forms[g], lam, ej);
        mpq_class right = qmat_eval(theta.forms[g], ej, lam);
        left.canonicalize();
        right.canonicalize();
        if (left.get_den() != 1 || right.get_den() != 1)
          throw std::invalid_argument(
              "cocycle is not integral against the lattice: g=" + perm_str(G.elems[g]) +
              " lattice generator i=" + std::to_string(k) + " coordinate j=" + std::to_string(j));
      }
    }
}

}  // namespace

int fib_index(const Lattice& L, int g, const ZVec& v) {
  return int(g * L.quotient_order().get_si() + L.flat_index(v));
}

Presentation build_fibration(const PermGroup& G, const CocycleFamily& theta, const Lattice& L) {
  fibration_preflight(G, theta, L);
  long box = L.quotient_order().get_si();
  int m = int(G.size());
  Presentation P;
  P.dim = int(m * box);
  std::vector<ZVec> reps(box);
  for (long f = 0; f < box; ++f) reps[f] = L.rep_of_flat(f);
  P.labels.resize(P.dim);
  for (int g = 0; g < m; ++g)
    for (long f = 0; f < box; ++f)
      P.labels[g * box + f] = "U" + zvec_str(reps[f]) + "(" + perm_str(G.elems[g]) + ")";
  P.unit = vec_zero(P.dim);
  for (int g = 0; g < m; ++g) P.unit[g * box + L.flat_index(ZVec(G.n, mpz_class(0)))] = Cyclo::one();
  P.counit = vec_zero(P.dim);
  P.mult.assign(size_t(P.dim) * P.dim, {});
  P.comult.assign(P.dim, {});
  P.antipode.assign(P.dim, {});
  P.star.assign(P.dim, {});
  auto neg = [&](const ZVec& v) {
    ZVec r(v.size());
    for (size_t t = 0; t < v.size(); ++t) r[t] = -v[t];
    return r;
  };
  for (int g = 0; g < m; ++g)
    for (long fi = 0; fi < box; ++fi) {
      int i = int(g * box + fi);
      P.counit[i] = g == G.e ? Cyclo::one() : Cyclo::zero();
      for (long fj = 0; fj < box; ++fj) {
        int j = int(g * box + fj);
        ZVec sum(G.n);
        for (int t = 0; t < G.n; ++t) sum[t] = reps[fi][t] + reps[fj][t];
        Cyclo coeff = Cyclo::phase(qmat_eval(theta.forms[g], reps[fi], reps[fj]));
        P.mult[size_t(i) * P.dim + j].push_back({int(g * box + L.flat_index(sum)), coeff});
      }
      for (int ga = 0; ga < m; ++ga) {
        int gb = G.mult[G.inv[ga]][g];  // ga * gb = g
        long fa = L.flat_index(perm_act(G.elems[gb], reps[fi]));
        P.comult[i].push_back({int(ga * box + fa), int(gb * box + fi), Cyclo::one()});
      }
      {
        ZVec img = perm_act(G.elems[g], reps[fi]);
        P.antipode[i].push_back({int(G.inv[g] * box + L.flat_index(neg(img))),
                                 Cyclo::phase(-qmat_eval(theta.forms[g], reps[fi], reps[fi]))});
        P.star[i].push_back({int(g * box + L.flat_index(neg(reps[fi]))),
                             Cyclo::phase(qmat_eval(theta.forms[g], reps[fi], reps[fi]))});
      }
    }
  P.meta.name = "fibration";
  P.meta.params["group"] = group_to_json(G);
  P.meta.params["cocycle"] = cocycle_to_json(theta);
  nlohmann::ordered_json lat = nlohmann::json::array();
  for (int i = 0; i < G.n; ++i) {
    nlohmann::ordered_json row = nlohmann::json::array();
    for (int j = 0; j < G.n; ++j) row.push_back(L.columns()[i][j].get_str());
    lat.push_back(row);
  }
  P.meta.params["lattice"] = lat;
  for (int g = 0; g < m; ++g) {
    P.meta.generator_indices.push_back(int(g * box + L.flat_index(ZVec(G.n, mpz_class(0)))));
    for (int k = 0; k < G.n; ++k) {
      ZVec ek(G.n, mpz_class(0));
      ek[k] = 1;
      P.meta.generator_indices.push_back(int(g * box + L.flat_index(ek)));
    }
  }
  P.normalize();
  return P;
}

Presentation build_w_subalgebra(const PermGroup& G, const CocycleFamily& theta, const Lattice& L) {
  fibration_preflight(G, theta, L);
  long box = L.quotient_order().get_si();
  int m = int(G.size());
  Presentation P;
  P.dim = int(m * box);
  std::vector<ZVec> reps(box);
  for (long f = 0; f < box; ++f) reps[f] = L.rep_of_flat(f);
  P.labels.resize(P.dim);
  for (int g = 0; g < m; ++g)
    for (long f = 0; f < box; ++f)
      P.labels[g * box + f] = "w" + zvec_str(reps[f]) + "(" + perm_str(G.elems[g]) + ")";
  long zero_flat = L.flat_index(ZVec(G.n, mpz_class(0)));
  P.unit = vec_zero(P.dim);
  for (long f = 0; f < box; ++f) P.unit[G.e * box + f] = Cyclo::one();
  P.counit = vec_zero(P.dim);
  P.mult.assign(size_t(P.dim) * P.dim, {});
  P.comult.assign(P.dim, {});
  P.antipode.assign(P.dim, {});
  P.star.assign(P.dim, {});
  for (int g = 0; g < m; ++g)
    for (long fi = 0; fi < box; ++fi) {
      int i = int(g * box + fi);
      P.counit[i] = fi == zero_flat ? Cyclo::one() : Cyclo::zero();
      for (int h = 0; h < m; ++h)
        for (long fj = 0; fj < box; ++fj) {
          int j = int(h * box + fj);
          if (L.flat_index(perm_act(G.elems[h], reps[fj])) != fi) continue;
          P.mult[size_t(i) * P.dim + j].push_back({int(G.mult[g][h] * box + fj), Cyclo::one()});
        }
      for (long fk = 0; fk < box; ++fk)
        for (long fl = 0; fl < box; ++fl) {
          ZVec sum(G.n);
          for (int t = 0; t < G.n; ++t) sum[t] = reps[fk][t] + reps[fl][t];
          if (L.flat_index(sum) != fi) continue;
          Cyclo coeff = Cyclo::phase(qmat_eval(theta.forms[g], reps[fk], reps[fl]));
          P.comult[i].push_back({int(g * box + fk), int(g * box + fl), coeff});
        }
      ZVec img = perm_act(G.elems[g], reps[fi]);
      ZVec nimg(img.size());
      for (size_t t = 0; t < img.size(); ++t) nimg[t] = -img[t];
      P.antipode[i].push_back({int(G.inv[g] * box + L.flat_index(nimg)),
                               Cyclo::phase(qmat_eval(theta.forms[g], reps[fi], reps[fi]))});
      P.star[i].push_back({int(G.inv[g] * box + L.flat_index(img)), Cyclo::one()});
    }
  P.meta.name = "w-sub";
  P.meta.params["group"] = group_to_json(G);
  P.meta.params["cocycle"] = cocycle_to_json(theta);
  P.normalize();
  return P;
}

Presentation build_group_algebra(const PermGroup& G) {
  int m = int(G.size());
  Presentation P;
  P.dim = m;
  P.labels.resize(m);
  for (int g = 0; g < m; ++g) P.labels[g] = "g(" + perm_str(G.elems[g]) + ")";
  P.unit = vec_zero(m);
  P.unit[G.e] = Cyclo::one();
  P.counit = Vec(m, Cyclo::one());
  P.mult.assign(size_t(m) * m, {});
  P.comult.assign(m, {});
  P.antipode.assign(m, {});
  P.star.assign(m, {});
  for (int g = 0; g < m; ++g) {
    for (int h = 0; h < m; ++h) P.mult[size_t(g) * m + h].push_back({G.mult[g][h], Cyclo::one()});
    P.comult[g].push_back({g, g, Cyclo::one()});
    P.antipode[g].push_back({G.inv[g], Cyclo::one()});
    P.star[g].push_back({G.inv[g], Cyclo::one()});
  }
  P.meta.name = "group-algebra";
  P.meta.params["group"] = group_to_json(G);
  P.normalize();
  return P;
}

Presentation build_function_algebra(const PermGroup& G) {
  int m = int(G.size());
  Presentation P;
  P.dim = m;
  P.labels.resize(m);
  for (int g = 0; g < m; ++g) P.labels[g] = "d(" + perm_str(G.elems[g]) + ")";
  P.unit = Vec(m, Cyclo::one());
  P.counit = vec_zero(m);
  P.mult.assign(size_t(m) * m, {});
  P.comult.assign(m, {});
  P.antipode.assign(m, {});
  P.star.assign(m, {});
  for (int g = 0; g < m; ++g) {
    P.counit[g] = g == G.e ? Cyclo::one() : Cyclo::zero();
    P.mult[size_t(g) * m + g].push_back({g, Cyclo::one()});
    for (int u = 0; u < m; ++u) {
      int v = G.mult[G.inv[u]][g];  // u * v = g
      P.comult[g].push_back({u, v, Cyclo::one()});
    }
    P.antipode[g].push_back({G.inv[g], Cyclo::one()});
    P.star[g].push_back({g, Cyclo::one()});
  }
  P.meta.name = "function-algebra";
  P.meta.params["group"] = group_to_json(G);
  P.normalize();
  return P;
}

}  // namespace qmt
