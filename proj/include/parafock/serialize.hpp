#pragma once

#include <string>

#include <json.hpp>

#include "parafock/algebra_spec.hpp"

namespace parafock {

/// Insertion-ordered JSON keeps emission layout fixed; combined with string
/// rationals this makes output byte-stable across runs.
using Json = nlohmann::ordered_json;

inline Json level_fn_to_json(const LevelFn& f) {
  Json j;
  switch (f.kind()) {
    case LevelFn::Kind::Affine:
      j["affine"] = Json::array({f.affine_a().str(), f.affine_b().str()});
      break;
    case LevelFn::Kind::Step:
      j["step"] = f.step_p();
      break;
    case LevelFn::Kind::Product: {
      Json factors = Json::array();
      for (const auto& g : f.factors()) factors.push_back(level_fn_to_json(g));
      j["product"] = std::move(factors);
      break;
    }
  }
  return j;
}

inline LevelFn level_fn_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1)
    throw std::invalid_argument("LevelFn: expected one of affine/step/product");
  if (j.contains("affine")) {
    const auto& arr = j.at("affine");
    if (!arr.is_array() || arr.size() != 2)
      throw std::invalid_argument("LevelFn: affine expects [a, b]");
    return LevelFn::affine(Rational::parse(arr.at(0).get<std::string>()),
                           Rational::parse(arr.at(1).get<std::string>()));
  }
  if (j.contains("step")) return LevelFn::step(j.at("step").get<int>());
  if (j.contains("product")) {
    std::vector<LevelFn> factors;
    for (const auto& g : j.at("product")) factors.push_back(level_fn_from_json(g));
    return LevelFn::product(std::move(factors));
  }
  throw std::invalid_argument("LevelFn: unknown kind");
}

inline Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix: expected array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = j.at(static_cast<std::size_t>(r));
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = Rational::parse(row.at(static_cast<std::size_t>(c)).get<std::string>());
  }
  return m;
}

inline Json spec_to_json(const AlgebraSpec& spec) {
  Json j;
  j["modes"] = spec.modes;
  j["grades"] = spec.grades;
  j["f"] = level_fn_to_json(spec.f);
  j["h"] = level_fn_to_json(spec.h);
  j["q"] = matrix_to_json(spec.q);
  j["y"] = matrix_to_json(spec.y);
  j["z"] = matrix_to_json(spec.z);
  j["max_n"] = spec.max_n;
  return j;
}

inline AlgebraSpec spec_from_json(const Json& j) {
  AlgebraSpec spec;
  spec.modes = j.at("modes").get<int>();
  spec.grades = j.at("grades").get<std::vector<int>>();
  spec.f = level_fn_from_json(j.at("f"));
  spec.h = level_fn_from_json(j.at("h"));
  spec.q = matrix_from_json(j.at("q"));
  spec.y = matrix_from_json(j.at("y"));
  spec.z = matrix_from_json(j.at("z"));
  spec.max_n = j.at("max_n").get<int>();
  spec.validate();
  return spec;
}

inline std::string spec_to_string(const AlgebraSpec& spec) {
  return spec_to_json(spec).dump(2) + "\n";
}

inline AlgebraSpec spec_from_string(const std::string& text) {
  return spec_from_json(Json::parse(text));
}

}  // namespace parafock
