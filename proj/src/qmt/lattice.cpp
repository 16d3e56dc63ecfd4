#include "qmt/lattice.hpp"

#include <sstream>
#include <stdexcept>

#include "qmt/linalg.hpp"

namespace qmt {

namespace {

void row_swap(ZMat& m, int a, int b) { std::swap(m[a], m[b]); }

void row_addmul(ZMat& m, int dst, int src, const mpz_class& c) {
  for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += c * m[src][j];
}

void col_swap(ZMat& m, int a, int b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

void col_addmul(ZMat& m, int dst, int src, const mpz_class& c) {
  for (auto& row : m) row[dst] += c * row[src];
}

ZMat identity_z(int n) {
  ZMat m(n, ZVec(n, mpz_class(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

SmithResult smith_normal_form(ZMat A) {
  int n = int(A.size());
  for (auto& row : A)
    if (int(row.size()) != n) throw std::invalid_argument("lattice matrix must be square");
  SmithResult res;
  res.U = identity_z(n);
  res.V = identity_z(n);
  for (int t = 0; t < n; ++t) {
    for (;;) {
      // Move the minimal nonzero entry of the trailing submatrix to the pivot.
      int bi = -1, bj = -1;
      mpz_class best;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j) {
          if (A[i][j] == 0) continue;
          mpz_class v = abs(A[i][j]);
          if (bi < 0 || v < best) { best = v; bi = i; bj = j; }
        }
      if (bi < 0) throw std::invalid_argument("lattice generators are singular");
      if (bi != t) { row_swap(A, bi, t); row_swap(res.U, bi, t); }
      if (bj != t) { col_swap(A, bj, t); col_swap(res.V, bj, t); }
      bool dirty = false;
      for (int i = t + 1; i < n; ++i) {
        if (A[i][t] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), A[i][t].get_mpz_t(), A[t][t].get_mpz_t());
        row_addmul(A, i, t, -q);
        row_addmul(res.U, i, t, -q);
        if (A[i][t] != 0) dirty = true;
      }
      if (dirty) continue;
      for (int j = t + 1; j < n; ++j) {
        if (A[t][j] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), A[t][j].get_mpz_t(), A[t][t].get_mpz_t());
        col_addmul(A, j, t, -q);
        col_addmul(res.V, j, t, -q);
        if (A[t][j] != 0) dirty = true;
      }
      if (dirty) continue;
      // Enforce that the pivot divides the rest of the submatrix.
      int wi = -1;
      for (int i = t + 1; i < n && wi < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (A[i][j] % A[t][t] != 0) { wi = i; break; }
      if (wi >= 0) {
        row_addmul(A, t, wi, mpz_class(1));
        row_addmul(res.U, t, wi, mpz_class(1));
        continue;
      }
      break;
    }
    if (A[t][t] < 0) {
      for (int j = 0; j < n; ++j) { A[t][j] = -A[t][j]; res.U[t][j] = -res.U[t][j]; }
    }
  }
  res.s.resize(n);
  for (int t = 0; t < n; ++t) res.s[t] = A[t][t];
  return res;
}

Lattice Lattice::from_columns(const ZMat& A) {
  Lattice L;
  L.n_ = int(A.size());
  L.A_ = A;
  SmithResult snf = smith_normal_form(A);
  L.U_ = std::move(snf.U);
  L.s_ = std::move(snf.s);
  // U is unimodular, so its rational inverse is integral.
  Mat<mpq_class> uq(L.n_, L.n_);
  for (int i = 0; i < L.n_; ++i)
    for (int j = 0; j < L.n_; ++j) uq.at(i, j) = mpq_class(L.U_[i][j]);
  auto inv = inverse(uq);
  if (!inv) throw std::logic_error("row transform not invertible");
  L.Uinv_.assign(L.n_, ZVec(L.n_, mpz_class(0)));
  for (int i = 0; i < L.n_; ++i)
    for (int j = 0; j < L.n_; ++j) {
      mpq_class v = inv->at(i, j);
      v.canonicalize();
      if (v.get_den() != 1) throw std::logic_error("row transform inverse not integral");
      L.Uinv_[i][j] = v.get_num();
    }
  L.order_ = 1;
  for (const auto& s : L.s_) L.order_ *= s;
  return L;
}

Lattice Lattice::scaled(int n, long N) {
  ZMat A(n, ZVec(n, mpz_class(0)));
  for (int i = 0; i < n; ++i) A[i][i] = N;
  return from_columns(A);
}

Lattice Lattice::full(int n) { return scaled(n, 1); }

bool Lattice::contains(const ZVec& x) const {
  for (int i = 0; i < n_; ++i) {
    mpz_class y = 0;
    for (int j = 0; j < n_; ++j) y += U_[i][j] * x[j];
    if (y % s_[i] != 0) return false;
  }
  return true;
}

ZVec Lattice::digits(const ZVec& x) const {
  ZVec d(n_);
  for (int i = 0; i < n_; ++i) {
    mpz_class y = 0;
    for (int j = 0; j < n_; ++j) y += U_[i][j] * x[j];
    mpz_class r = y % s_[i];
    if (r < 0) r += s_[i];
    d[i] = r;
  }
  return d;
}

ZVec Lattice::representative(const ZVec& x) const {
  ZVec d = digits(x);
  ZVec r(n_, mpz_class(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i] += Uinv_[i][j] * d[j];
  return r;
}

long Lattice::flat_index(const ZVec& x) const {
  ZVec d = digits(x);
  mpz_class idx = 0;
  for (int i = 0; i < n_; ++i) idx = idx * s_[i] + d[i];
  return idx.get_si();
}

ZVec Lattice::rep_of_flat(long idx) const {
  ZVec d(n_);
  for (int i = n_ - 1; i >= 0; --i) {
    mpz_class si = s_[i];
    d[i] = mpz_class(idx) % si;
    idx = mpz_class(mpz_class(idx) / si).get_si();
  }
  ZVec r(n_, mpz_class(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i] += Uinv_[i][j] * d[j];
  return r;
}

ZVec Lattice::basis_vector(int k) const {
  ZVec v(n_);
  for (int i = 0; i < n_; ++i) v[i] = Uinv_[i][k] * s_[k];
  return v;
}

ZVec Lattice::basis_coefficients(const ZVec& x) const {
  ZVec c(n_);
  for (int i = 0; i < n_; ++i) {
    mpz_class y = 0;
    for (int j = 0; j < n_; ++j) y += U_[i][j] * x[j];
    if (y % s_[i] != 0) throw std::invalid_argument("vector is not in the lattice");
    c[i] = y / s_[i];
  }
  return c;
}

bool Lattice::invariant_under(const Perm& p) const {
  for (int k = 0; k < n_; ++k) {
    ZVec lam = basis_vector(k);
    ZVec img = perm_act(p, lam);
    if (!contains(img)) return false;
  }
  return true;
}

std::string zvec_str(const ZVec& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace qmt
