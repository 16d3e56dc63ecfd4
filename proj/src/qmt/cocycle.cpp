#include "qmt/cocycle.hpp"

#include <stdexcept>

#include "qmt/linalg.hpp"

namespace qmt {

QMat qmat_zero(int n) { return QMat(n, std::vector<mpq_class>(n, mpq_class(0))); }

QMat qmat_add(const QMat& a, const QMat& b) {
  QMat r = a;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

QMat qmat_sub(const QMat& a, const QMat& b) {
  QMat r = a;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
  return r;
}

QMat qmat_scale(const QMat& a, const mpq_class& c) {
  QMat r = a;
  for (auto& row : r)
    for (auto& v : row) v *= c;
  return r;
}

QMat qmat_transpose(const QMat& a) {
  int n = int(a.size());
  QMat r = qmat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i][j] = a[j][i];
  return r;
}

QMat qmat_pullback(const Perm& p, const QMat& a) {
  int n = int(a.size());
  QMat r = qmat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i][j] = a[p[i]][p[j]];
  return r;
}

bool qmat_is_zero(const QMat& a) {
  for (const auto& row : a)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

bool qmat_is_antisymmetric(const QMat& a) {
  int n = int(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a[i][j] != -a[j][i]) return false;
  return true;
}

mpq_class qmat_eval(const QMat& a, const ZVec& x, const ZVec& y) {
  mpq_class acc = 0;
  int n = int(a.size());
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      acc += mpq_class(x[i]) * a[i][j] * mpq_class(y[j]);
    }
  }
  return acc;
}

bool CocycleFamily::antisymmetric() const {
  for (const auto& f : forms)
    if (!qmat_is_antisymmetric(f)) return false;
  return true;
}

std::optional<CocycleWitness> cocycle_defect(const CocycleFamily& fam) {
  int m = int(fam.G.size());
  if (!qmat_is_zero(fam.forms[fam.G.e])) return CocycleWitness{fam.G.e, fam.G.e, 0, 0};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      QMat want = qmat_add(fam.forms[b], qmat_pullback(fam.G.elems[b], fam.forms[a]));
      const QMat& got = fam.forms[fam.G.mult[a][b]];
      for (int i = 0; i < fam.n; ++i)
        for (int j = 0; j < fam.n; ++j)
          if (want[i][j] != got[i][j]) return CocycleWitness{a, b, i, j};
    }
  return std::nullopt;
}

namespace {

// Linear expressions over the generator unknowns.
using Expr = std::vector<mpq_class>;
using ExprMat = std::vector<std::vector<Expr>>;

Expr expr_zero(int nu) { return Expr(nu, mpq_class(0)); }

ExprMat expr_mat_zero(int n, int nu) {
  return ExprMat(n, std::vector<Expr>(n, expr_zero(nu)));
}

// Indexing of unknowns per generator: full n x n grid, or strict upper triangle.
int unknown_count(int n, bool antisym) { return antisym ? n * (n - 1) / 2 : n * n; }

Expr generator_entry(int s, int i, int j, int n, bool antisym, int per, int nu) {
  Expr e = expr_zero(nu);
  if (antisym) {
    if (i == j) return e;
    int a = std::min(i, j), b = std::max(i, j);
    int idx = s * per + (a * (2 * n - a - 1)) / 2 + (b - a - 1);
    e[idx] = (i < j) ? 1 : -1;
  } else {
    e[s * per + i * n + j] = 1;
  }
  return e;
}

std::vector<ExprMat> propagate_forms(const PermGroup& G, bool antisym, int nu, int per) {
  int n = G.n;
  std::vector<ExprMat> forms(G.size(), expr_mat_zero(n, nu));
  for (size_t k = 1; k < G.size(); ++k) {
    int p = G.parent[k], s = G.via[k];
    const Perm& sv = G.gens[s];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Expr e = generator_entry(s, i, j, n, antisym, per, nu);
        const Expr& tail = forms[p][sv[i]][sv[j]];
        for (int u = 0; u < nu; ++u) e[u] += tail[u];
        forms[k][i][j] = std::move(e);
      }
  }
  return forms;
}

CocycleFamily instantiate(const PermGroup& G, const std::vector<ExprMat>& forms,
                          const std::vector<mpq_class>& assign) {
  CocycleFamily fam;
  fam.G = G;
  fam.n = G.n;
  fam.forms.resize(G.size());
  for (size_t k = 0; k < G.size(); ++k) {
    QMat m = qmat_zero(G.n);
    for (int i = 0; i < G.n; ++i)
      for (int j = 0; j < G.n; ++j) {
        mpq_class acc = 0;
        for (size_t u = 0; u < assign.size(); ++u) acc += forms[k][i][j][u] * assign[u];
        m[i][j] = acc;
      }
    fam.forms[k] = std::move(m);
  }
  return fam;
}

}  // namespace

CocycleBasis solve_cocycles(const PermGroup& G, bool antisym) {
  int n = G.n;
  int per = unknown_count(n, antisym);
  int nu = per * int(G.gens.size());
  auto forms = propagate_forms(G, antisym, nu, per);
  // Consistency of the propagated forms across the whole multiplication table.
  std::vector<Expr> rows;
  int m = int(G.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const Perm& hb = G.elems[b];
      int ab = G.mult[a][b];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Expr row = forms[ab][i][j];
          const Expr& t1 = forms[b][i][j];
          const Expr& t2 = forms[a][hb[i]][hb[j]];
          bool nonzero = false;
          for (int u = 0; u < nu; ++u) {
            row[u] -= t1[u] + t2[u];
            if (row[u] != 0) nonzero = true;
          }
          if (nonzero) rows.push_back(std::move(row));
        }
    }
  // A redundant generator never serves as a BFS edge, so the table rows above
  // cannot see its unknowns; pin every generator form to the propagated form
  // of its own group element.
  for (size_t s = 0; s < G.gens.size(); ++s) {
    int es = G.index_of(G.gens[s]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Expr row = forms[es][i][j];
        Expr ge = generator_entry(int(s), i, j, n, antisym, per, nu);
        bool nonzero = false;
        for (int u = 0; u < nu; ++u) {
          row[u] -= ge[u];
          if (row[u] != 0) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
  }
  Mat<mpq_class> sys(int(rows.size()), nu);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int u = 0; u < nu; ++u) sys.at(int(r), u) = rows[r][u];
  auto kernel = rows.empty() ? [&] {
    std::vector<std::vector<mpq_class>> full;
    for (int u = 0; u < nu; ++u) {
      std::vector<mpq_class> v(nu, mpq_class(0));
      v[u] = 1;
      full.push_back(std::move(v));
    }
    return full;
  }() : nullspace(sys);
  CocycleBasis out;
  out.dim = int(kernel.size());
  for (const auto& assign : kernel) {
    CocycleFamily fam = instantiate(G, forms, assign);
    if (cocycle_defect(fam)) throw std::logic_error("solver produced a non-cocycle");
    out.basis.push_back(std::move(fam));
  }
  return out;
}

CocycleFamily family_from_generator_forms(const PermGroup& G, const std::vector<QMat>& gen_forms) {
  if (gen_forms.size() != G.gens.size())
    throw std::invalid_argument("need one form per group generator");
  CocycleFamily fam;
  fam.G = G;
  fam.n = G.n;
  fam.forms.assign(G.size(), qmat_zero(G.n));
  for (size_t k = 1; k < G.size(); ++k) {
    int p = G.parent[k], s = G.via[k];
    fam.forms[k] = qmat_add(gen_forms[s], qmat_pullback(G.gens[s], fam.forms[p]));
  }
  if (auto w = cocycle_defect(fam)) {
    throw std::invalid_argument("generator forms are inconsistent at pair (" +
                                perm_str(G.elems[w->g]) + ", " + perm_str(G.elems[w->h]) + ")");
  }
  for (size_t s = 0; s < G.gens.size(); ++s) {
    int es = G.index_of(G.gens[s]);
    if (!qmat_is_zero(qmat_sub(fam.forms[size_t(es)], gen_forms[s])))
      throw std::invalid_argument("form for generator " + perm_str(G.gens[s]) +
                                  " disagrees with the form propagated to that element");
  }
  return fam;
}

CocycleFamily antisymmetrize(const CocycleFamily& fam) {
  CocycleFamily out = fam;
  for (auto& f : out.forms) f = qmat_scale(qmat_sub(f, qmat_transpose(f)), mpq_class(1, 2));
  return out;
}

mpq_class rescale_exponent(const CocycleFamily& fam, int g, const ZVec& j) {
  mpq_class t = qmat_eval(fam.forms[g], j, j);
  return -t / 2;
}

std::optional<QMat> coboundary_potential(const CocycleFamily& fam) {
  int n = fam.n, m = int(fam.G.size());
  int nu = n * n;
  Mat<mpq_class> A(m * nu, nu);
  std::vector<mpq_class> b(size_t(m) * nu, mpq_class(0));
  int row = 0;
  for (int g = 0; g < m; ++g) {
    const Perm& p = fam.G.elems[g];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        A.at(row, i * n + j) += 1;
        A.at(row, p[i] * n + p[j]) -= 1;
        b[row] = fam.forms[g][i][j];
        ++row;
      }
  }
  auto x = solve(A, b);
  if (!x) return std::nullopt;
  QMat phi = qmat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) phi[i][j] = (*x)[i * n + j];
  return phi;
}

QMat averaging_potential(const CocycleFamily& fam) {
  QMat acc = qmat_zero(fam.n);
  for (const auto& f : fam.forms) acc = qmat_add(acc, f);
  return qmat_scale(acc, mpq_class(1, long(fam.G.size())));
}

CocycleFamily coboundary_of(const PermGroup& G, const QMat& phi) {
  CocycleFamily fam;
  fam.G = G;
  fam.n = G.n;
  for (const Perm& p : G.elems) fam.forms.push_back(qmat_sub(phi, qmat_pullback(p, phi)));
  return fam;
}

Cochain coboundary(const Cochain& c) {
  Cochain d;
  d.k = c.k + 1;
  d.G = c.G;
  d.n = c.n;
  int m = int(c.G->size());
  std::vector<std::vector<int>> tuples{{}};
  for (int t = 0; t < d.k; ++t) {
    std::vector<std::vector<int>> next;
    for (const auto& tup : tuples)
      for (int g = 0; g < m; ++g) {
        auto t2 = tup;
        t2.push_back(g);
        next.push_back(std::move(t2));
      }
    tuples = std::move(next);
  }
  for (const auto& tup : tuples) {
    QMat acc = qmat_zero(c.n);
    {  // leading face: drop g_1
      std::vector<int> face(tup.begin() + 1, tup.end());
      acc = qmat_add(acc, c.vals.at(face));
    }
    int sign = -1;
    for (int i = 0; i + 1 < int(tup.size()); ++i) {
      std::vector<int> face;
      for (int t = 0; t < int(tup.size()); ++t) {
        if (t == i) {
          face.push_back(c.G->mult[tup[i]][tup[i + 1]]);
          ++t;  // skip the merged slot
        } else {
          face.push_back(tup[t]);
        }
      }
      acc = qmat_add(acc, qmat_scale(c.vals.at(face), mpq_class(sign)));
      sign = -sign;
    }
    {  // trailing face: drop g_{k+1}, pull back along it
      std::vector<int> face(tup.begin(), tup.end() - 1);
      QMat pulled = qmat_pullback(c.G->elems[tup.back()], c.vals.at(face));
      acc = qmat_add(acc, qmat_scale(pulled, mpq_class(sign)));
    }
    d.vals[tup] = std::move(acc);
  }
  return d;
}

nlohmann::ordered_json group_to_json(const PermGroup& G) {
  nlohmann::ordered_json j;
  j["n"] = G.n;
  j["generators"] = nlohmann::json::array();
  for (const Perm& p : G.gens) j["generators"].push_back(perm_str(p));
  j["elements"] = nlohmann::json::array();
  for (const Perm& p : G.elems) j["elements"].push_back(perm_str(p));
  return j;
}

PermGroup group_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::vector<Perm> gens;
  for (const auto& s : j.at("generators")) gens.push_back(perm_parse(s.get<std::string>(), n));
  return PermGroup::close(n, gens);
}

nlohmann::ordered_json cocycle_to_json(const CocycleFamily& fam) {
  nlohmann::ordered_json j;
  j["group"] = group_to_json(fam.G);
  j["n"] = fam.n;
  nlohmann::ordered_json forms = nlohmann::ordered_json::object();
  for (size_t k = 0; k < fam.G.size(); ++k) {
    nlohmann::ordered_json m = nlohmann::json::array();
    for (int i = 0; i < fam.n; ++i) {
      nlohmann::ordered_json row = nlohmann::json::array();
      for (int jj = 0; jj < fam.n; ++jj) row.push_back(fam.forms[k][i][jj].get_str());
      m.push_back(row);
    }
    forms[perm_str(fam.G.elems[k])] = m;
  }
  j["forms"] = forms;
  return j;
}

CocycleFamily cocycle_from_json(const nlohmann::json& j) {
  CocycleFamily fam;
  fam.G = group_from_json(j.at("group"));
  fam.n = j.at("n").get<int>();
  fam.forms.assign(fam.G.size(), qmat_zero(fam.n));
  for (const auto& [key, mat] : j.at("forms").items()) {
    int idx = fam.G.index_of(perm_parse(key, fam.n));
    if (idx < 0) throw std::invalid_argument("form key is not a group element: " + key);
    QMat m = qmat_zero(fam.n);
    for (int i = 0; i < fam.n; ++i)
      for (int jj = 0; jj < fam.n; ++jj) {
        mpq_class v(mat.at(i).at(jj).get<std::string>());
        v.canonicalize();
        m[i][jj] = v;
      }
    fam.forms[idx] = std::move(m);
  }
  if (auto w = cocycle_defect(fam))
    throw std::invalid_argument("forms do not satisfy the cocycle condition (witness pair " +
                                std::to_string(w->g) + "," + std::to_string(w->h) + ")");
  return fam;
}

}  // namespace qmt
