/*
 * Copyright 2026 The alphaperm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "alphaperm/alpha_witness.hpp"
#include "alphaperm/concavity.hpp"
#include "alphaperm/error.hpp"
#include "alphaperm/hyperbolic.hpp"
#include "alphaperm/matrix.hpp"
#include "alphaperm/series.hpp"

namespace alphaperm::json_io {

using Json = nlohmann::ordered_json;

// Scalars. Standalone values are always "p/q" strings; matrix entries use
// plain integers where they fit.

inline Json to_json(const Rational& r) { return r.to_string(); }

inline Json to_json(const ComplexRational& z) { return Json::array({z.real().to_string(), z.imag().to_string()}); }

inline Json entry_to_json(const Rational& r) {
  if (r.is_integer() && r.numerator().fits_slong_p()) return r.numerator().get_si();
  return r.to_string();
}

inline Json entry_to_json(const ComplexRational& z) {
  return Json::array({entry_to_json(z.real()), entry_to_json(z.imag())});
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(mpz_class(j.get<std::uint64_t>()), mpz_class(1));
    return Rational(j.get<long>());
  }
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline ComplexRational complex_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError("complex entry must be a two-element array [re, im]");
    return ComplexRational(rational_from_json(j[0]), rational_from_json(j[1]));
  }
  return ComplexRational(rational_from_json(j));
}

template <ExactScalar T>
T scalar_from_json(const Json& j) {
  if constexpr (is_complex_v<T>)
    return complex_from_json(j);
  else
    return rational_from_json(j);
}

template <ExactScalar T>
Json vector_to_json(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(entry_to_json(x));
  return a;
}

template <ExactScalar T>
std::vector<T> vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a JSON array of scalars");
  std::vector<T> v;
  for (const auto& x : j) v.push_back(scalar_from_json<T>(x));
  return v;
}

// Matrices: {"rows": r, "cols": c, "entries": [[...], ...]}.

template <ExactScalar T>
Json matrix_to_json(const Matrix<T>& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(entry_to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  Json out;
  out["rows"] = a.rows();
  out["cols"] = a.cols();
  out["entries"] = std::move(rows);
  return out;
}

inline bool matrix_json_is_complex(const Json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    throw ParseError("matrix JSON must be an object with \"rows\", \"cols\" and \"entries\"");
  for (const auto& row : j["entries"]) {
    if (!row.is_array()) throw ParseError("matrix JSON: each row of \"entries\" must be an array");
    for (const auto& e : row)
      if (e.is_array()) return true;
  }
  return false;
}

template <ExactScalar T>
Matrix<T> matrix_from_json(const Json& j) {
  const bool complex = matrix_json_is_complex(j);
  if (complex && !is_complex_v<T>) throw ParseError("matrix JSON: complex entries in a real matrix");
  if (!j.contains("rows") || !j.contains("cols") || !j["rows"].is_number_unsigned() ||
      !j["cols"].is_number_unsigned())
    throw ParseError("matrix JSON: \"rows\" and \"cols\" must be nonnegative integers");
  const auto r = j["rows"].get<std::size_t>();
  const auto c = j["cols"].get<std::size_t>();
  const auto& entries = j["entries"];
  if (entries.size() != r) throw ParseError("matrix JSON: row count differs from \"rows\"");
  Matrix<T> a(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (entries[i].size() != c) throw ParseError("matrix JSON: row length differs from \"cols\"");
    for (std::size_t k = 0; k < c; ++k) a(i, k) = scalar_from_json<T>(entries[i][k]);
  }
  return a;
}

using AnyMatrix = std::variant<RMatrix, CMatrix>;

inline AnyMatrix any_matrix_from_json(const Json& j) {
  if (matrix_json_is_complex(j)) return matrix_from_json<ComplexRational>(j);
  return matrix_from_json<Rational>(j);
}

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

// Coefficient maps: [{"n": [..], "value": "p/q"}, ...] in graded-lex order.

template <ExactScalar T>
Json coefficients_to_json(const CoefficientMap<T>& c) {
  Json a = Json::array();
  for (const auto& [n, v] : c) {
    Json t;
    t["n"] = n.parts();
    t["value"] = to_json(v);
    a.push_back(std::move(t));
  }
  return a;
}

template <ExactScalar T>
CoefficientMap<T> coefficients_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("coefficient JSON must be an array");
  CoefficientMap<T> c;
  for (const auto& t : j) {
    if (!t.contains("n") || !t.contains("value")) throw ParseError("coefficient entry needs \"n\" and \"value\"");
    c[MultiIndex(t["n"].get<std::vector<std::uint32_t>>())] = scalar_from_json<T>(t["value"]);
  }
  return c;
}

// Polynomials: [{"exp": [..], "coef": "p/q"}, ...].

inline Json poly_to_json(const RSparsePoly& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exp"] = e.parts();
    t["coef"] = to_json(c);
    a.push_back(std::move(t));
  }
  return a;
}

inline RSparsePoly poly_from_json(const Json& j, std::optional<std::size_t> nvars = std::nullopt) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
  if (!nvars) {
    if (j.empty()) throw ParseError("polynomial JSON: empty term list needs an explicit variable count");
    nvars = j[0].at("exp").size();
  }
  RSparsePoly p(*nvars);
  for (const auto& t : j) {
    if (!t.contains("exp") || !t.contains("coef")) throw ParseError("polynomial term needs \"exp\" and \"coef\"");
    const auto e = t["exp"].get<std::vector<std::uint32_t>>();
    if (e.size() != *nvars) throw ParseError("polynomial JSON: exponent lengths differ");
    p.add_term(MultiIndex(e), rational_from_json(t["coef"]));
  }
  return p;
}

inline Json vectors_to_json(const std::vector<RVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vector_to_json(v));
  return a;
}

inline std::vector<RVector> vectors_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of vectors");
  std::vector<RVector> out;
  for (const auto& v : j) out.push_back(vector_from_json<Rational>(v));
  return out;
}

// Reports.

inline Json to_json(const Certificate& c) {
  Json out;
  out["trials"] = c.trials;
  out["seed"] = c.seed;
  out["passed"] = c.passed;
  out["lines_passed"] = c.lines_passed;
  if (c.counterexample) out["counterexample"] = vector_to_json(*c.counterexample);
  return out;
}

inline Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.trials = j.at("trials").get<std::size_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.passed = j.at("passed").get<bool>();
  if (j.contains("lines_passed")) c.lines_passed = j["lines_passed"].get<std::size_t>();
  if (j.contains("counterexample")) c.counterexample = vector_from_json<Rational>(j["counterexample"]);
  return c;
}

inline Json to_json(const GardingReport& r) {
  Json out;
  out["passed"] = r.passed;
  out["derivative_certificate"] = to_json(r.derivative_cert);
  out["points_checked"] = r.points_checked;
  out["containment_failures"] = r.containment_failures;
  out["witnesses"] = vectors_to_json(r.witnesses);
  return out;
}

inline Json to_json(const ConcavityReport& r) {
  Json out;
  out["trials"] = r.trials;
  out["violations"] = r.violations;
  out["worst_margin"] = r.worst_margin ? to_json(*r.worst_margin) : Json(nullptr);
  out["seed"] = r.seed;
  Json w = Json::array();
  for (const auto& v : r.witnesses) {
    Json e;
    e["x"] = vector_to_json(v.x);
    e["y"] = vector_to_json(v.y);
    e["margin"] = to_json(v.margin);
    w.push_back(std::move(e));
  }
  out["witnesses"] = std::move(w);
  return out;
}

inline Json to_json(const HessianReport& r) {
  Json out;
  out["points"] = r.points;
  out["tol"] = r.tol;
  out["max_scaled_eigenvalue"] = r.max_scaled_eigenvalue;
  out["violations"] = r.violations;
  out["seed"] = r.seed;
  return out;
}

inline Json to_json(const AlphaClass& c) {
  Json out;
  out["alpha"] = to_json(c.alpha);
  out["field"] = std::string(to_string(c.field));
  out["member"] = c.member;
  out["reason"] = std::string(to_string(c.reason));
  out["m"] = c.m ? Json(*c.m) : Json(nullptr);
  out["conjecture4_claimed"] = c.conjecture4_claimed;
  return out;
}

inline Json to_json(const NonnegativityReport& r) {
  Json out;
  out["alpha"] = to_json(r.alpha);
  out["field"] = std::string(to_string(r.field));
  out["samples"] = r.samples;
  out["max_size"] = r.max_size;
  out["violations"] = r.violations;
  out["min_value"] = r.min_value ? to_json(*r.min_value) : Json(nullptr);
  out["seed"] = r.seed;
  return out;
}

inline Json to_json(const WitnessSearchLog& log) {
  Json out;
  out["alpha"] = to_json(log.alpha);
  out["field"] = std::string(to_string(log.field));
  out["beta"] = to_json(log.beta);
  out["m"] = log.m;
  out["frame_size"] = log.frame_size;
  out["max_degree"] = log.max_degree;
  out["escalate_to"] = log.escalate_to;
  out["retries"] = log.retries;
  out["seed"] = log.seed;
  Json a = Json::array();
  for (const auto& at : log.attempts) {
    Json e;
    e["index"] = at.index;
    e["escalation"] = at.escalation;
    e["degree"] = at.degree;
    if (at.box) e["box"] = at.box->parts();
    e["terms"] = at.terms;
    e["budget_limited"] = at.budget_limited;
    e["found"] = at.found;
    a.push_back(std::move(e));
  }
  out["attempts"] = std::move(a);
  return out;
}

inline Json to_json(const WitnessVerification& v) {
  Json out;
  out["series"] = v.series;
  out["naive"] = v.naive ? Json(*v.naive) : Json(nullptr);
  out["reduction"] = v.reduction;
  out["psd"] = v.psd;
  out["series_verified_only"] = v.series_verified_only();
  return out;
}

template <ExactScalar T>
Json witness_to_json(const Witness<T>& w) {
  Json out;
  out["alpha"] = to_json(w.alpha);
  out["field"] = std::string(to_string(field_of<T>));
  out["m"] = w.m;
  Json frame = Json::array();
  for (const auto& v : w.frame) frame.push_back(vector_to_json(v));
  out["frame"] = std::move(frame);
  out["y"] = vector_to_json(w.y);
  out["gram"] = matrix_to_json(w.gram);
  out["n_index"] = w.n.parts();
  out["det_alpha_value"] = to_json(w.det_alpha_value);
  out["verification"] = to_json(w.verification);
  out["attempt"] = w.attempt;
  out["escalated"] = w.escalated;
  return out;
}

/// Reads the stored fields of a witness; verification flags are taken as recorded.
template <ExactScalar T>
Witness<T> witness_from_json(const Json& j) {
  if (parse_field(j.at("field").get<std::string>()) != field_of<T>)
    throw ParseError("witness JSON: field does not match the requested scalar type");
  Witness<T> w;
  w.alpha = rational_from_json(j.at("alpha"));
  w.m = j.at("m").get<std::size_t>();
  for (const auto& v : j.at("frame")) w.frame.push_back(vector_from_json<T>(v));
  w.y = vector_from_json<Rational>(j.at("y"));
  w.gram = matrix_from_json<T>(j.at("gram"));
  w.gram.assert_selfadjoint();
  w.n = MultiIndex(j.at("n_index").get<std::vector<std::uint32_t>>());
  w.det_alpha_value = rational_from_json(j.at("det_alpha_value"));
  const auto& v = j.at("verification");
  w.verification.series = v.at("series").get<bool>();
  if (!v.at("naive").is_null()) w.verification.naive = v["naive"].get<bool>();
  w.verification.reduction = v.value("reduction", false);
  w.verification.psd = v.value("psd", false);
  w.attempt = j.value("attempt", std::size_t{0});
  w.escalated = j.value("escalated", false);
  return w;
}

template <ExactScalar T>
Json to_json(const WitnessOutcome<T>& o) {
  Json out;
  out["exhausted"] = o.exhausted();
  out["witness"] = o.witness ? witness_to_json(*o.witness) : Json(nullptr);
  out["search"] = to_json(o.log);
  return out;
}

/// Canonical text form: two-space indent and a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace alphaperm::json_io
