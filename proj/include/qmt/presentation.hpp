#pragma once
// Finite dimensional Hopf *-algebras as exact structure constant tables over a
// cyclotomic field.  All maps are stored columnwise and sparsely on the basis.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmt/cyclo.hpp"

namespace qmt {

struct Term {
  int k = 0;      // target basis index
  Cyclo c;
};
using Column = std::vector<Term>;

struct CoTerm {
  int j = 0, k = 0;  // tensor legs
  Cyclo c;
};
using CoColumn = std::vector<CoTerm>;

using Vec = std::vector<Cyclo>;

struct Meta {
  std::string name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<int> generator_indices;  // basis indices generating the algebra
  std::string notes;
};

struct Presentation {
  int dim = 0;
  int field_modulus = 1;
  std::vector<std::string> labels;
  Vec unit;
  Vec counit;                     // counit[i] = eps(x_i)
  std::vector<Column> mult;       // mult[i * dim + j] = x_i x_j
  std::vector<CoColumn> comult;   // comult[i] = Delta x_i
  std::vector<Column> antipode;   // antipode[i] = S x_i
  std::vector<Column> star;       // star[i] = (x_i)^*, entries act antilinearly
  Meta meta;

  const Column& product(int i, int j) const { return mult[size_t(i) * dim + j]; }
  int label_index(const std::string& s) const;

  // Sorts columns, drops zeros, recomputes field_modulus, rebuilds label lookup.
  void normalize();

 private:
  std::map<std::string, int> label_map_;
};

Vec vec_zero(int dim);
Vec basis_vec(int dim, int i);
bool vec_is_zero(const Vec& v);
bool vec_eq(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Cyclo& c);
double vec_norm(const Vec& v);  // numeric embedding norm, for reporting only

Vec mul_vec(const Presentation& P, const Vec& x, const Vec& y);
Vec apply_linear(const std::vector<Column>& cols, const Vec& x);      // antipode
Vec apply_antilinear(const std::vector<Column>& cols, const Vec& x);  // star
Cyclo counit_of(const Presentation& P, const Vec& x);

nlohmann::ordered_json cyclo_to_json(const Cyclo& c);
Cyclo cyclo_from_json(const nlohmann::json& j);
nlohmann::ordered_json presentation_to_json(const Presentation& P);
Presentation presentation_from_json(const nlohmann::json& j);
void save_presentation(const std::string& path, const Presentation& P);
Presentation load_presentation(const std::string& path);

}  // namespace qmt
