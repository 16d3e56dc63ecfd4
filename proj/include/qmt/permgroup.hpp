#pragma once
// Finite permutation groups on {0..n-1}, closed from generators by BFS.
// One-line notation: p[i] is the image of i; composition (p*q)(i) = p(q(i)).

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qmt {

using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
std::string perm_str(const Perm& p);          // "1,2,0"
Perm perm_parse(const std::string& s, int n); // inverse of perm_str, validates

// Coordinate permutation on integer vectors: (p . v)[p[k]] = v[k].
template <class T>
std::vector<T> perm_act(const Perm& p, const std::vector<T>& v) {
  std::vector<T> out(v.size());
  for (size_t k = 0; k < v.size(); ++k) out[p[k]] = v[k];
  return out;
}

struct PermGroup {
  int n = 0;
  std::vector<Perm> elems;                    // elems[0] = identity
  std::vector<Perm> gens;
  std::vector<std::vector<int>> mult;         // mult[a][b] = index of elems[a] * elems[b]
  std::vector<int> inv;
  int e = 0;
  // BFS tree: elems[k] = elems[parent[k]] * gens[via[k]], parent[e] = -1.
  std::vector<int> parent, via;

  static PermGroup close(int n, std::vector<Perm> generators);
  int index_of(const Perm& p) const;          // -1 if absent
  size_t size() const { return elems.size(); }

 private:
  std::map<Perm, int> index_;
};

// Named groups: "ZN" is the full N-cycle acting on n = N letters.
PermGroup named_group(const std::string& name, int n);

}  // namespace qmt
