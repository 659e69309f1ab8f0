#pragma once

// JSON encodings of the library types. Complex numbers are [re, im].

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "nctorus/connections.hpp"
#include "nctorus/coverings.hpp"
#include "nctorus/forms.hpp"
#include "nctorus/infinite_cover.hpp"

namespace nctorus::json_io {

using json = nlohmann::json;

[[noreturn]] inline void schema_error(const std::string& what) {
  throw Error(ErrorCode::InvalidScenario, what);
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline double number(const json& j, const char* what) {
  if (!j.is_number()) schema_error(std::string(what) + " must be a number");
  return j.get<double>();
}

inline std::int64_t integer(const json& j, const char* what) {
  if (!j.is_number_integer()) schema_error(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

inline json complex_to_json(complex c) { return json::array({c.real(), c.imag()}); }

inline complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) schema_error("complex numbers are [re, im] pairs");
  return {number(j[0], "re"), number(j[1], "im")};
}

inline json element_to_json(const TorusElement& a) {
  json terms = json::array();
  for (const auto& [key, c] : a.terms()) {
    terms.push_back({{"m", key.m}, {"n", key.n}, {"re", c.real()}, {"im", c.imag()}, {"lk", key.lk}});
  }
  return {{"theta", a.params().theta()}, {"terms", terms}};
}

inline TorusElement element_from_json(const json& j) {
  TorusElement out(TorusParams(number(field(j, "theta"), "theta")));
  const json& terms = field(j, "terms");
  if (!terms.is_array()) schema_error("\"terms\" must be an array");
  for (const auto& t : terms) {
    const std::int64_t lk = t.contains("lk") ? integer(t.at("lk"), "lk") : 0;
    out.add_term({integer(field(t, "m"), "m"), integer(field(t, "n"), "n"), lk},
                 {number(field(t, "re"), "re"), number(field(t, "im"), "im")});
  }
  return out;
}

inline json one_form_to_json(const OneForm& w) {
  return {{"du", element_to_json(w.du)}, {"dv", element_to_json(w.dv)}};
}

inline json two_form_to_json(const TwoForm& w) { return {{"dudv", element_to_json(w.dudv)}}; }

template <class T, class F>
json matrix_to_json(const SquareMatrix<T>& m, F&& encode) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.rank(); ++j) row.push_back(encode(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json complex_matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Entries are either [re, im] (a constant over the given theta) or a full
/// element object, whose theta must match.
inline ElementMatrix element_matrix_from_json(const json& j, TorusParams params, std::size_t rank,
                                              const char* what) {
  if (!j.is_array() || j.size() != rank) {
    schema_error(std::string(what) + " must have " + std::to_string(rank) + " rows");
  }
  ElementMatrix out(rank, TorusElement(params));
  for (std::size_t i = 0; i < rank; ++i) {
    if (!j[i].is_array() || j[i].size() != rank) {
      schema_error(std::string(what) + " must be square");
    }
    for (std::size_t k = 0; k < rank; ++k) {
      const json& e = j[i][k];
      TorusElement entry = e.is_array() ? TorusElement::scalar(params, complex_from_json(e))
                                        : element_from_json(e);
      if (!(entry.params() == params)) {
        throw Error(ErrorCode::ParamMismatch, std::string(what) + " entry has a different theta");
      }
      out(i, k) = std::move(entry);
    }
  }
  return out;
}

inline json connection_to_json(const Connection& conn) {
  auto encode = [](const TorusElement& e) -> json {
    if (e.is_scalar()) return complex_to_json(e.scalar_part());
    return element_to_json(e);
  };
  return {{"rank", conn.rank()},
          {"theta_u", matrix_to_json(conn.theta_u(), encode)},
          {"theta_v", matrix_to_json(conn.theta_v(), encode)},
          {"constant", conn.constant_coefficients()}};
}

inline Connection connection_from_json(const json& j, TorusParams params) {
  const std::int64_t rank = integer(field(j, "rank"), "rank");
  if (rank < 1) throw Error(ErrorCode::InvalidRank, "connection rank must be positive");
  const auto n = static_cast<std::size_t>(rank);
  Connection conn(element_matrix_from_json(field(j, "theta_u"), params, n, "theta_u"),
                  element_matrix_from_json(field(j, "theta_v"), params, n, "theta_v"));
  if (j.contains("constant")) {
    const json& flag = j.at("constant");
    if (!flag.is_boolean()) schema_error("\"constant\" must be a boolean");
    if (flag.get<bool>() != conn.constant_coefficients()) {
      schema_error("\"constant\" flag disagrees with the coefficients");
    }
  }
  return conn;
}

inline json weight_to_json(const WeightVector& w) { return json::array({w.alpha, w.beta}); }

inline WeightVector weight_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) schema_error("weights are [alpha, beta] pairs");
  return {number(j[0], "alpha"), number(j[1], "beta")};
}

inline json transport_to_json(const TransportOperator& t) {
  return {{"matrix", complex_matrix_to_json(t.matrix())},
          {"weight", weight_to_json(t.weight())},
          {"tau", t.tau()}};
}

inline json covering_to_json(const CoveringSpec& spec) {
  return {{"theta", spec.base().theta()}, {"degrees", json::array({spec.k1(), spec.k2()})}};
}

inline CoveringSpec covering_from_json(const json& j, TorusParams base) {
  const json& degrees = field(j, "degrees");
  if (!degrees.is_array() || degrees.size() != 2) schema_error("\"degrees\" must be [k1, k2]");
  return {base, integer(degrees[0], "k1"), integer(degrees[1], "k2")};
}

inline json deck_to_json(const DeckElement& g) { return json::array({g.a, g.b}); }

inline json path_report_to_json(const ClosedPathReport& r) {
  return {{"weight", json::array({r.alpha, r.beta})},
          {"closed", r.closed},
          {"deck", r.associated ? deck_to_json(*r.associated) : json(nullptr)},
          {"witness", r.witness ? json(*r.witness) : json(nullptr)}};
}

inline json character_monomial_to_json(const CharacterMonomial& m) {
  return {{"c", complex_to_json(m.c)}, {"a", m.uleg.frequency}, {"b", m.vleg.frequency}};
}

inline CharacterMonomial character_monomial_from_json(const json& j) {
  return {complex_from_json(field(j, "c")), {number(field(j, "a"), "a")}, {number(field(j, "b"), "b")}};
}

}  // namespace nctorus::json_io
