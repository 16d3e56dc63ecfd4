#include "qmt/permgroup.hpp"

#include <sstream>
#include <stdexcept>

namespace qmt {

Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = int(i);
  return r;
}

std::string perm_str(const Perm& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ",";
    os << p[i];
  }
  return os.str();
}

Perm perm_parse(const std::string& s, int n) {
  Perm p;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) p.push_back(std::stoi(tok));
  if (int(p.size()) != n) throw std::invalid_argument("permutation has wrong length: " + s);
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a permutation: " + s);
    seen[v] = true;
  }
  return p;
}

PermGroup PermGroup::close(int n, std::vector<Perm> generators) {
  PermGroup g;
  g.n = n;
  g.gens = std::move(generators);
  for (const Perm& s : g.gens)
    if (int(s.size()) != n) throw std::invalid_argument("generator arity mismatch");
  Perm id = perm_identity(n);
  g.elems.push_back(id);
  g.index_[id] = 0;
  g.parent.push_back(-1);
  g.via.push_back(-1);
  for (size_t head = 0; head < g.elems.size(); ++head) {
    Perm v = g.elems[head];  // copy: elems may reallocate
    for (size_t s = 0; s < g.gens.size(); ++s) {
      Perm w = perm_compose(v, g.gens[s]);
      if (g.index_.count(w)) continue;
      g.index_[w] = int(g.elems.size());
      g.elems.push_back(w);
      g.parent.push_back(int(head));
      g.via.push_back(int(s));
    }
  }
  size_t m = g.elems.size();
  g.mult.assign(m, std::vector<int>(m, 0));
  g.inv.assign(m, 0);
  for (size_t a = 0; a < m; ++a) {
    for (size_t b = 0; b < m; ++b) {
      int idx = g.index_of(perm_compose(g.elems[a], g.elems[b]));
      if (idx < 0) throw std::logic_error("closure is not closed");
      g.mult[a][b] = idx;
    }
    g.inv[a] = g.index_of(perm_inverse(g.elems[a]));
  }
  g.e = 0;
  return g;
}

int PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

PermGroup named_group(const std::string& name, int n) {
  if (name.size() >= 2 && name[0] == 'Z') {
    int N = std::stoi(name.substr(1));
    if (N != n)
      throw std::invalid_argument("group " + name + " needs n = " + std::to_string(N) +
                                  " coordinates; pass explicit generators otherwise");
    Perm cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    return PermGroup::close(n, {cycle});
  }
  throw std::invalid_argument("unknown group name: " + name);
}

}  // namespace qmt
