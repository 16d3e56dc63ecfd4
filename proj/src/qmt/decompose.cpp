#include "qmt/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>

namespace qmt {

namespace {

using Cx = std::complex<double>;

Mat<Cyclo> columns_product(const Mat<Cyclo>& B, const Mat<Cyclo>& coeffs) {
  return mat_mul(B, coeffs);
}

Mat<Cyclo> from_nullspace(const std::vector<std::vector<Cyclo>>& ns, int rows) {
  Mat<Cyclo> m(rows, int(ns.size()));
  for (size_t c = 0; c < ns.size(); ++c)
    for (int r = 0; r < rows; ++r) m.at(r, int(c)) = ns[c][r];
  return m;
}

Vec col_of(const Mat<Cyclo>& B, int c) {
  Vec v(B.rows);
  for (int r = 0; r < B.rows; ++r) v[r] = B.at(r, c);
  return v;
}

// Numeric sparse product tables for the block identification phase.
struct NumericAlgebra {
  int dim;
  std::vector<std::vector<std::pair<int, Cx>>> mult;  // mult[i * dim + j]

  explicit NumericAlgebra(const Presentation& P) : dim(P.dim), mult(size_t(P.dim) * P.dim) {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (const auto& t : P.product(i, j))
          mult[size_t(i) * dim + j].push_back({t.k, t.c.embed()});
  }

  std::vector<Cx> mul(const std::vector<Cx>& x, const std::vector<Cx>& y) const {
    std::vector<Cx> out(dim, Cx(0));
    for (int i = 0; i < dim; ++i) {
      if (std::abs(x[i]) < 1e-300) continue;
      for (int j = 0; j < dim; ++j) {
        if (std::abs(y[j]) < 1e-300) continue;
        for (const auto& [k, c] : mult[size_t(i) * dim + j]) out[k] += x[i] * y[j] * c;
      }
    }
    return out;
  }
};

double vec_inf_norm(const std::vector<Cx>& v) {
  double m = 0;
  for (const Cx& x : v) m = std::max(m, std::abs(x));
  return m;
}

struct BlockRun {
  std::vector<int> blocks;
  double residual = 0;
  bool ok = false;
};

BlockRun identify_blocks(const Presentation& P, const Mat<Cyclo>& B, unsigned long seed) {
  BlockRun run;
  int dim = P.dim, cdim = B.cols;
  NumericAlgebra num(P);

  std::vector<std::vector<Cx>> center_cols(cdim, std::vector<Cx>(dim));
  for (int c = 0; c < cdim; ++c)
    for (int r = 0; r < dim; ++r) center_cols[c][r] = B.at(r, c).embed();
  std::vector<Cx> one(dim);
  for (int r = 0; r < dim; ++r) one[r] = P.unit[r].embed();

  std::mt19937_64 gen(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    // Gaussian-integer combination; plain modulo keeps the stream identical
    // across standard libraries, and the imaginary parts break the eigenvalue
    // collisions that purely real coefficients hit when the characters take
    // small integer values on the exact center basis.
    std::vector<Cx> z(dim, Cx(0));
    for (int c = 0; c < cdim; ++c) {
      Cx coeff(double(gen() % 1001) - 500, double(gen() % 1001) - 500);
      for (int r = 0; r < dim; ++r) z[r] += coeff * center_cols[c][r];
    }

    // Left multiplication by z restricted to the center.
    Eigen::MatrixXcd Lz(dim, cdim);
    for (int c = 0; c < cdim; ++c) {
      std::vector<Cx> prod = num.mul(z, center_cols[c]);
      for (int r = 0; r < dim; ++r) Lz(r, c) = prod[r];
    }
    Eigen::MatrixXcd Bc(dim, cdim);
    for (int c = 0; c < cdim; ++c)
      for (int r = 0; r < dim; ++r) Bc(r, c) = center_cols[c][r];
    // Solve Bc * M = Lz for the cdim x cdim action matrix.
    Eigen::MatrixXcd M = Bc.colPivHouseholderQr().solve(Lz);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M);
    if (es.info() != Eigen::Success) continue;
    std::vector<Cx> evs(cdim);
    for (int i = 0; i < cdim; ++i) evs[i] = es.eigenvalues()(i);

    double scale = 1.0;
    for (const Cx& l : evs) scale = std::max(scale, std::abs(l));
    double ctol = 1e-6 * scale;
    std::vector<Cx> reps;
    for (const Cx& l : evs) {
      bool fresh = true;
      for (const Cx& r : reps)
        if (std::abs(l - r) <= ctol) { fresh = false; break; }
      if (fresh) reps.push_back(l);
    }
    if (int(reps.size()) != cdim) continue;  // z failed to separate, redraw

    // Each eigenvector of the center action spans a primitive-idempotent line;
    // w^2 = alpha w recovers the scale, then e <- 3e^2 - 2e^3 polishes.
    double residual = 0;
    std::vector<std::vector<Cx>> idem;
    std::vector<Cx> total(dim, Cx(0));
    bool degenerate = false;
    for (int i = 0; i < cdim; ++i) {
      std::vector<Cx> w(dim, Cx(0));
      for (int c = 0; c < cdim; ++c) {
        Cx vc = es.eigenvectors()(c, i);
        for (int r = 0; r < dim; ++r) w[r] += vc * center_cols[c][r];
      }
      std::vector<Cx> ww = num.mul(w, w);
      int r0 = 0;
      for (int r = 1; r < dim; ++r)
        if (std::abs(w[r]) > std::abs(w[r0])) r0 = r;
      Cx alpha = std::abs(w[r0]) > 0 ? ww[r0] / w[r0] : Cx(0);
      if (std::abs(alpha) < 1e-8) { degenerate = true; break; }
      std::vector<Cx> e(dim);
      for (int r = 0; r < dim; ++r) e[r] = w[r] / alpha;
      for (int polish = 0; polish < 2; ++polish) {
        std::vector<Cx> e2 = num.mul(e, e);
        std::vector<Cx> e3 = num.mul(e2, e);
        for (int r = 0; r < dim; ++r) e[r] = 3.0 * e2[r] - 2.0 * e3[r];
      }
      std::vector<Cx> ee = num.mul(e, e);
      for (int r = 0; r < dim; ++r) ee[r] -= e[r];
      residual = std::max(residual, vec_inf_norm(ee));
      for (int r = 0; r < dim; ++r) total[r] += e[r];
      idem.push_back(std::move(e));
    }
    if (degenerate) continue;
    for (int r = 0; r < dim; ++r) total[r] -= one[r];
    residual = std::max(residual, vec_inf_norm(total));

    std::vector<int> blocks;
    bool square_ok = true;
    for (const auto& e : idem) {
      Eigen::MatrixXcd cols(dim, dim);
      for (int j = 0; j < dim; ++j) {
        std::vector<Cx> xj(dim, Cx(0));
        xj[j] = Cx(1);
        std::vector<Cx> v = num.mul(num.mul(e, xj), e);
        for (int r = 0; r < dim; ++r) cols(r, j) = v[r];
      }
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cols);
      double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
      double tol = 1e-8 * std::max(1.0, smax);
      int rank = 0;
      for (int k = 0; k < svd.singularValues().size(); ++k)
        if (svd.singularValues()(k) > tol) ++rank;
      int n = int(std::lround(std::sqrt(double(rank))));
      if (n * n != rank) { square_ok = false; break; }
      blocks.push_back(n);
    }
    if (!square_ok) continue;
    std::sort(blocks.begin(), blocks.end());

    run.blocks = blocks;
    run.residual = residual;
    run.ok = true;
    return run;
  }
  return run;
}

}  // namespace

Mat<Cyclo> center_basis(const Presentation& P) {
  std::vector<int> gens = P.meta.generator_indices;
  if (gens.empty())
    for (int i = 0; i < P.dim; ++i) gens.push_back(i);

  Mat<Cyclo> B = Mat<Cyclo>::identity(P.dim);
  for (int g : gens) {
    Vec xg = basis_vec(P.dim, g);
    Mat<Cyclo> K(P.dim, B.cols);
    for (int c = 0; c < B.cols; ++c) {
      Vec zc = col_of(B, c);
      Vec com = vec_sub(mul_vec(P, zc, xg), mul_vec(P, xg, zc));
      for (int r = 0; r < P.dim; ++r) K.at(r, c) = com[r];
    }
    auto ns = nullspace(K);
    B = columns_product(B, from_nullspace(ns, B.cols));
    if (B.cols == 0) break;  // cannot happen for unital algebras
  }
  return B;
}

Json DecompositionReport::to_json() const {
  Json j;
  j["dim"] = dim;
  j["center_dim"] = center_dim;
  j["blocks"] = blocks;
  j["residual"] = fmt_double(residual);
  j["seed"] = seed;
  j["seeds_agree"] = seeds_agree;
  j["consistent"] = consistent;
  return j;
}

DecompositionReport decompose(const Presentation& P, unsigned long seed) {
  DecompositionReport rep;
  rep.dim = P.dim;
  rep.seed = seed;
  Mat<Cyclo> B = center_basis(P);
  rep.center_dim = B.cols;

  BlockRun first;
  bool agree = true;
  for (unsigned long s = seed; s < seed + 3; ++s) {
    BlockRun run = identify_blocks(P, B, s);
    if (!run.ok) { agree = false; break; }
    if (s == seed) first = run;
    else if (run.blocks != first.blocks) agree = false;
    first.residual = std::max(first.residual, run.residual);
  }
  if (!first.ok) {
    rep.seeds_agree = false;
    rep.consistent = false;
    return rep;
  }
  rep.blocks = first.blocks;
  rep.residual = first.residual;
  rep.seeds_agree = agree;
  long total = 0;
  for (int n : rep.blocks) total += long(n) * n;
  rep.consistent = total == rep.dim && int(rep.blocks.size()) == rep.center_dim;
  return rep;
}

Presentation sector_split(const Presentation& P, const std::vector<int>& subset) {
  std::vector<int> S = subset;
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  std::vector<int> where(P.dim, -1);
  for (size_t i = 0; i < S.size(); ++i) {
    if (S[i] < 0 || S[i] >= P.dim) throw std::invalid_argument("sector index out of range");
    where[S[i]] = int(i);
  }
  int d = int(S.size());
  if (d == 0) throw std::invalid_argument("sector subset is empty");

  for (int i : S)
    for (int j = 0; j < P.dim; ++j) {
      for (const auto& t : P.product(i, j))
        if (where[t.k] < 0)
          throw std::invalid_argument("subset is not a right ideal at " + P.labels[i] + " * " +
                                      P.labels[j]);
      for (const auto& t : P.product(j, i))
        if (where[t.k] < 0)
          throw std::invalid_argument("subset is not a left ideal at " + P.labels[j] + " * " +
                                      P.labels[i]);
    }

  // Solve for the ideal unit: e x_s = x_s for every s in the sector.
  Mat<Cyclo> A(d * d, d);
  std::vector<Cyclo> rhs(size_t(d) * d);
  for (int srow = 0; srow < d; ++srow) {
    for (int t = 0; t < d; ++t)
      for (const auto& term : P.product(S[t], S[srow]))
        A.at(srow * d + where[term.k], t) += term.c;
    rhs[size_t(srow) * d + srow] = Cyclo::one();
  }
  auto sol = solve(A, rhs);
  if (!sol) throw std::invalid_argument("sector has no unit; not a unital ideal");
  Vec e = vec_zero(P.dim);
  for (int t = 0; t < d; ++t) e[S[t]] = (*sol)[t];

  for (int i = 0; i < P.dim; ++i) {
    Vec xi = basis_vec(P.dim, i);
    if (!vec_eq(mul_vec(P, e, xi), mul_vec(P, xi, e)))
      throw std::invalid_argument("sector unit is not central in the ambient algebra");
  }
  if (!vec_eq(mul_vec(P, e, e), e))
    throw std::invalid_argument("sector unit is not idempotent");
  for (int s : S) {
    Vec xs = basis_vec(P.dim, s);
    if (!vec_eq(mul_vec(P, e, xs), xs))
      throw std::invalid_argument("sector unit does not fix the sector");
  }

  Presentation Q;
  Q.dim = d;
  Q.labels.resize(d);
  for (int t = 0; t < d; ++t) Q.labels[t] = P.labels[S[t]];
  Q.unit = vec_zero(d);
  for (int t = 0; t < d; ++t) Q.unit[t] = (*sol)[t];
  Q.counit = vec_zero(d);
  for (int t = 0; t < d; ++t) Q.counit[t] = P.counit[S[t]];
  Q.mult.assign(size_t(d) * d, {});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& t : P.product(S[i], S[j]))
        Q.mult[size_t(i) * d + j].push_back({where[t.k], t.c});
  Q.comult.assign(d, {});  // the sector is only an algebra
  Q.antipode.assign(d, {});
  Q.star.assign(d, {});
  bool star_closed = true;
  for (int i = 0; i < d && star_closed; ++i)
    for (const auto& t : P.star[S[i]])
      if (where[t.k] < 0) { star_closed = false; break; }
  if (star_closed)
    for (int i = 0; i < d; ++i)
      for (const auto& t : P.star[S[i]]) Q.star[i].push_back({where[t.k], t.c});
  Q.meta.name = P.meta.name + "-sector";
  Q.meta.params = P.meta.params;
  Q.normalize();
  return Q;
}

}  // namespace qmt
