#include "qmt/presentation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace qmt {

int Presentation::label_index(const std::string& s) const {
  auto it = label_map_.find(s);
  if (it == label_map_.end()) throw std::invalid_argument("unknown label: " + s);
  return it->second;
}

void Presentation::normalize() {
  long m = 1;
  auto see = [&m](const Cyclo& c) { m = lcm_long(m, c.modulus()); };
  auto clean = [&](Column& col) {
    std::sort(col.begin(), col.end(), [](const Term& a, const Term& b) { return a.k < b.k; });
    Column merged;
    for (const Term& t : col) {
      if (!merged.empty() && merged.back().k == t.k)
        merged.back().c += t.c;
      else
        merged.push_back(t);
    }
    std::erase_if(merged, [](const Term& t) { return t.c.is_zero(); });
    col = std::move(merged);
    for (const Term& t : col) see(t.c);
  };
  for (auto& col : mult) clean(col);
  for (auto& col : antipode) clean(col);
  for (auto& col : star) clean(col);
  for (auto& col : comult) {
    std::sort(col.begin(), col.end(), [](const CoTerm& a, const CoTerm& b) {
      return a.j != b.j ? a.j < b.j : a.k < b.k;
    });
    CoColumn merged;
    for (const CoTerm& t : col) {
      if (!merged.empty() && merged.back().j == t.j && merged.back().k == t.k)
        merged.back().c += t.c;
      else
        merged.push_back(t);
    }
    std::erase_if(merged, [](const CoTerm& t) { return t.c.is_zero(); });
    col = std::move(merged);
    for (const CoTerm& t : col) see(t.c);
  }
  for (const Cyclo& c : unit) see(c);
  for (const Cyclo& c : counit) see(c);
  field_modulus = int(m);
  label_map_.clear();
  for (int i = 0; i < dim; ++i) label_map_[labels[i]] = i;
}

Vec vec_zero(int dim) { return Vec(dim, Cyclo::zero()); }

Vec basis_vec(int dim, int i) {
  Vec v = vec_zero(dim);
  v[i] = Cyclo::one();
  return v;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

bool vec_eq(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Vec& a, const Cyclo& c) {
  Vec r = a;
  for (auto& v : r) v *= c;
  return r;
}

double vec_norm(const Vec& v) {
  double acc = 0;
  for (const auto& c : v) acc += std::norm(c.embed());
  return std::sqrt(acc);
}

Vec mul_vec(const Presentation& P, const Vec& x, const Vec& y) {
  Vec r = vec_zero(P.dim);
  for (int i = 0; i < P.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < P.dim; ++j) {
      if (y[j].is_zero()) continue;
      Cyclo f = x[i] * y[j];
      for (const Term& t : P.product(i, j)) r[t.k] += f * t.c;
    }
  }
  return r;
}

Vec apply_linear(const std::vector<Column>& cols, const Vec& x) {
  Vec r = vec_zero(int(x.size()));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (const Term& t : cols[i]) r[t.k] += x[i] * t.c;
  }
  return r;
}

Vec apply_antilinear(const std::vector<Column>& cols, const Vec& x) {
  Vec r = vec_zero(int(x.size()));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    Cyclo xc = x[i].conj();
    for (const Term& t : cols[i]) r[t.k] += xc * t.c;
  }
  return r;
}

Cyclo counit_of(const Presentation& P, const Vec& x) {
  Cyclo acc;
  for (int i = 0; i < P.dim; ++i) {
    if (x[i].is_zero()) continue;
    acc += x[i] * P.counit[i];
  }
  return acc;
}

nlohmann::ordered_json cyclo_to_json(const Cyclo& c) {
  nlohmann::ordered_json j;
  j["modulus"] = c.modulus();
  nlohmann::ordered_json coeffs = nlohmann::json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(q.get_str());
  j["coeffs"] = coeffs;
  return j;
}

Cyclo cyclo_from_json(const nlohmann::json& j) {
  int m = j.at("modulus").get<int>();
  std::vector<mpq_class> coeffs;
  for (const auto& s : j.at("coeffs")) {
    mpq_class q(s.get<std::string>());
    q.canonicalize();
    coeffs.push_back(q);
  }
  return Cyclo(m, std::move(coeffs));
}

nlohmann::ordered_json presentation_to_json(const Presentation& P) {
  nlohmann::ordered_json j;
  j["format"] = "qmt-presentation-v1";
  j["dim"] = P.dim;
  j["field_modulus"] = P.field_modulus;
  j["labels"] = P.labels;
  nlohmann::ordered_json unit = nlohmann::json::array();
  for (const auto& c : P.unit) unit.push_back(cyclo_to_json(c));
  j["unit"] = unit;
  nlohmann::ordered_json counit = nlohmann::json::array();
  for (const auto& c : P.counit) counit.push_back(cyclo_to_json(c));
  j["counit"] = counit;
  nlohmann::ordered_json mult = nlohmann::json::array();
  for (int i = 0; i < P.dim; ++i)
    for (int jj = 0; jj < P.dim; ++jj)
      for (const Term& t : P.product(i, jj))
        mult.push_back(nlohmann::ordered_json{i, jj, t.k, cyclo_to_json(t.c)});
  j["mult"] = mult;
  nlohmann::ordered_json comult = nlohmann::json::array();
  for (int i = 0; i < P.dim; ++i)
    for (const CoTerm& t : P.comult[i])
      comult.push_back(nlohmann::ordered_json{i, t.j, t.k, cyclo_to_json(t.c)});
  j["comult"] = comult;
  nlohmann::ordered_json antipode = nlohmann::json::array();
  for (int i = 0; i < P.dim; ++i)
    for (const Term& t : P.antipode[i])
      antipode.push_back(nlohmann::ordered_json{i, t.k, cyclo_to_json(t.c)});
  j["antipode"] = antipode;
  nlohmann::ordered_json star = nlohmann::json::array();
  for (int i = 0; i < P.dim; ++i)
    for (const Term& t : P.star[i])
      star.push_back(nlohmann::ordered_json{i, t.k, cyclo_to_json(t.c)});
  j["star"] = star;
  nlohmann::ordered_json meta;
  meta["name"] = P.meta.name;
  meta["params"] = P.meta.params;
  meta["generator_indices"] = P.meta.generator_indices;
  meta["notes"] = P.meta.notes;
  j["meta"] = meta;
  return j;
}

Presentation presentation_from_json(const nlohmann::json& j) {
  if (j.at("format").get<std::string>() != "qmt-presentation-v1")
    throw std::invalid_argument("unsupported presentation format");
  Presentation P;
  P.dim = j.at("dim").get<int>();
  P.labels = j.at("labels").get<std::vector<std::string>>();
  if (int(P.labels.size()) != P.dim) throw std::invalid_argument("label count mismatch");
  for (const auto& c : j.at("unit")) P.unit.push_back(cyclo_from_json(c));
  for (const auto& c : j.at("counit")) P.counit.push_back(cyclo_from_json(c));
  if (int(P.unit.size()) != P.dim || int(P.counit.size()) != P.dim)
    throw std::invalid_argument("unit/counit length mismatch");
  P.mult.assign(size_t(P.dim) * P.dim, {});
  for (const auto& e : j.at("mult")) {
    int a = e.at(0).get<int>(), b = e.at(1).get<int>(), k = e.at(2).get<int>();
    P.mult[size_t(a) * P.dim + b].push_back({k, cyclo_from_json(e.at(3))});
  }
  P.comult.assign(P.dim, {});
  for (const auto& e : j.at("comult")) {
    int i = e.at(0).get<int>();
    P.comult[i].push_back({e.at(1).get<int>(), e.at(2).get<int>(), cyclo_from_json(e.at(3))});
  }
  P.antipode.assign(P.dim, {});
  for (const auto& e : j.at("antipode"))
    P.antipode[e.at(0).get<int>()].push_back({e.at(1).get<int>(), cyclo_from_json(e.at(2))});
  P.star.assign(P.dim, {});
  for (const auto& e : j.at("star"))
    P.star[e.at(0).get<int>()].push_back({e.at(1).get<int>(), cyclo_from_json(e.at(2))});
  const auto& meta = j.at("meta");
  P.meta.name = meta.at("name").get<std::string>();
  P.meta.params = meta.at("params");
  P.meta.generator_indices = meta.at("generator_indices").get<std::vector<int>>();
  P.meta.notes = meta.at("notes").get<std::string>();
  P.normalize();
  int declared = j.at("field_modulus").get<int>();
  if (declared % P.field_modulus != 0 && declared != P.field_modulus)
    throw std::invalid_argument("declared field modulus is inconsistent");
  P.field_modulus = declared;
  return P;
}

void save_presentation(const std::string& path, const Presentation& P) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << presentation_to_json(P).dump(1) << "\n";
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  nlohmann::json j;
  in >> j;
  return presentation_from_json(j);
}

}  // namespace qmt
