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
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "alphaperm/alpha_witness.hpp"
#include "alphaperm/concavity.hpp"
#include "alphaperm/hyperbolic.hpp"
#include "alphaperm/json_io.hpp"
#include "alphaperm/linalg.hpp"
#include "alphaperm/permanent.hpp"
#include "alphaperm/series.hpp"

namespace alphaperm::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Environment variable naming a JSON file of default option values.
inline constexpr const char* kConfigEnv = "ALPHAPERM_CONFIG";

using json_io::Json;

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
inline Json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
    return json_io::parse(arg);
  return json_io::parse(read_file(arg));
}

/// "1,0,-2/3" or a JSON array.
inline RVector parse_vector(const std::string& arg) {
  if (arg.find('[') != std::string::npos) return json_io::vector_from_json<Rational>(load_json(arg));
  RVector v;
  std::stringstream s(arg);
  std::string item;
  while (std::getline(s, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw ParseError("empty entry in vector '" + arg + "'");
    v.push_back(Rational::parse(item.substr(b, e - b + 1)));
  }
  if (v.empty()) throw ParseError("empty vector");
  return v;
}

inline MultiIndex parse_multi_index(const std::string& arg) {
  std::vector<std::uint32_t> parts;
  for (const auto& r : parse_vector(arg)) {
    if (!r.is_integer() || r.sign() < 0 || !r.numerator().fits_uint_p())
      throw ParseError("multi-index entries must be nonnegative integers");
    parts.push_back(static_cast<std::uint32_t>(r.numerator().get_ui()));
  }
  return MultiIndex(std::move(parts));
}

struct PolyInput {
  RSparsePoly h;
  std::optional<RVector> natural_direction;
};

inline std::size_t builtin_size(const std::string& s) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoul(s, &pos);
    if (pos != s.size() || v == 0) throw ParseError("bad size '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad size '" + s + "'");
  }
}

/// product:n, lorentz:n, symdet:n, esym:n:k, or JSON terms (inline or file).
inline PolyInput parse_poly(const std::string& arg) {
  auto parts = [&] {
    std::vector<std::string> p;
    std::stringstream s(arg);
    std::string item;
    while (std::getline(s, item, ':')) p.push_back(item);
    return p;
  }();
  const std::string& kind = parts.front();
  if (kind == "product" && parts.size() == 2) {
    const auto n = builtin_size(parts[1]);
    return {elementary_symmetric_poly(n, n), RVector(n, Rational(1))};
  }
  if (kind == "esym" && parts.size() == 3) {
    const auto n = builtin_size(parts[1]);
    return {elementary_symmetric_poly(n, builtin_size(parts[2])), RVector(n, Rational(1))};
  }
  if (kind == "lorentz" && parts.size() == 2) {
    const auto n = builtin_size(parts[1]);
    RVector e(n, Rational(0));
    e[0] = Rational(1);
    return {lorentz_poly(n), e};
  }
  if (kind == "symdet" && parts.size() == 2) {
    const auto n = builtin_size(parts[1]);
    return {symmetric_det_poly(n), flatten_sym(RMatrix::identity(n))};
  }
  return {json_io::poly_from_json(load_json(arg)), std::nullopt};
}

inline RVector direction_for(const PolyInput& p, const std::string& direction) {
  if (!direction.empty()) return parse_vector(direction);
  if (!p.natural_direction) throw ParseError("--direction is required for a polynomial given as terms");
  return *p.natural_direction;
}

inline std::vector<RMatrix> parse_matrix_list(const std::string& arg) {
  const auto j = load_json(arg);
  if (!j.is_array()) throw ParseError("expected a JSON array of matrices");
  std::vector<RMatrix> out;
  for (const auto& m : j) out.push_back(json_io::matrix_from_json<Rational>(m));
  return out;
}

template <class F>
auto with_field(Field field, F&& f) {
  if (field == Field::real) return f(Rational{});
  return f(ComplexRational{});
}

/// Defaults read from the config file named by ALPHAPERM_CONFIG, if any.
struct Defaults {
  Json values = Json::object();

  static Defaults load() {
    Defaults d;
    if (const char* path = std::getenv(kConfigEnv); path && *path) {
      d.values = json_io::parse(read_file(path));
      if (!d.values.is_object()) throw ParseError(std::string(kConfigEnv) + ": config must be a JSON object");
    }
    return d;
  }

  template <class T>
  void apply(const std::string& key, T& target) const {
    if (values.contains(key)) target = values[key].get<T>();
  }
};

}  // namespace detail

/// Runs one subcommand; JSON goes to `out`, diagnostics to `err`.
inline int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact alpha-permanents, hyperbolic polynomials and alpha-determinant witnesses", "alphaperm"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "alphaperm 1.0.0");

  detail::Defaults defaults;
  try {
    defaults = detail::Defaults::load();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  // shared option storage; each subcommand binds the ones it uses
  std::string matrix, matrix_b, alpha_arg, field_arg = "real", n_arg, poly_arg, direction, point, vectors,
      fixed, mode = "bapat", y_arg, output, identity = "per";
  std::optional<std::uint64_t> seed;
  std::size_t trials = kDefaultCertifyTrials, samples = 1000, max_size = 5, retries = 20, points = 20,
              term_budget = 2'000'000;
  std::uint32_t degree = 4, witness_degree = 12, escalate_to = 0;
  double tol = kHessianTolerance, work_budget = 5e7;
  bool invert = false;
  std::string radius = "1";
  defaults.apply("trials", trials);
  defaults.apply("samples", samples);
  defaults.apply("retries", retries);
  defaults.apply("points", points);
  defaults.apply("tol", tol);
  if (defaults.values.contains("seed")) seed = defaults.values["seed"].get<std::uint64_t>();

  Json result;
  int code = kOk;
  std::function<void()> action;

  auto add_seed = [&](CLI::App* s) { s->add_option("--seed", seed, "RNG seed (required)"); };
  auto need_seed = [&]() -> std::uint64_t {
    if (!seed) throw ParseError("--seed is required for randomized commands");
    return *seed;
  };
  auto alpha = [&] { return Alpha::parse(alpha_arg); };

  auto* per = app.add_subcommand("per", "permanent of a square matrix");
  per->add_option("--matrix", matrix, "matrix JSON (file or inline)")->required();
  std::string method = "ryser";
  per->add_option("--method", method, "naive or ryser")->check(CLI::IsMember({"naive", "ryser"}));
  per->callback([&] {
    action = [&] {
      auto any = json_io::any_matrix_from_json(detail::load_json(matrix));
      std::visit([&](const auto& a) { result["value"] = json_io::to_json(method == "naive" ? per_naive(a) : per_ryser(a)); }, any);
    };
  });

  auto* aper = app.add_subcommand("alpha-per", "alpha-permanent");
  aper->add_option("--matrix", matrix)->required();
  aper->add_option("--alpha", alpha_arg)->required();
  aper->callback([&] {
    action = [&] {
      auto any = json_io::any_matrix_from_json(detail::load_json(matrix));
      result["alpha"] = json_io::to_json(alpha().value());
      std::visit([&](const auto& a) { result["value"] = json_io::to_json(per_alpha(a, alpha())); }, any);
    };
  });

  auto* adet = app.add_subcommand("alpha-det", "alpha-determinant");
  adet->add_option("--matrix", matrix)->required();
  adet->add_option("--alpha", alpha_arg)->required();
  adet->callback([&] {
    action = [&] {
      auto any = json_io::any_matrix_from_json(detail::load_json(matrix));
      result["alpha"] = json_io::to_json(alpha().value());
      std::visit([&](const auto& a) { result["value"] = json_io::to_json(det_alpha(a, alpha())); }, any);
    };
  });

  auto* dil = app.add_subcommand("dilate", "block dilation A[n]");
  dil->add_option("--matrix", matrix)->required();
  dil->add_option("--n", n_arg, "multi-index, e.g. 2,0,1")->required();
  dil->callback([&] {
    action = [&] {
      auto any = json_io::any_matrix_from_json(detail::load_json(matrix));
      const auto n = detail::parse_multi_index(n_arg);
      std::visit([&](const auto& a) { result = json_io::matrix_to_json(dilate(a, n)); }, any);
    };
  });

  auto* psd = app.add_subcommand("psd-check", "exact positive semidefiniteness");
  psd->add_option("--matrix", matrix)->required();
  psd->callback([&] {
    action = [&] {
      auto any = json_io::any_matrix_from_json(detail::load_json(matrix));
      std::visit([&](auto a) {
        a.assert_selfadjoint();
        result["psd"] = is_psd_exact(a);
      }, any);
    };
  });

  auto* syl = app.add_subcommand("sylvester", "det(I - AB) = det(I - BA)");
  syl->add_option("--a", matrix)->required();
  syl->add_option("--b", matrix_b)->required();
  syl->callback([&] {
    action = [&] {
      const auto a = json_io::matrix_from_json<ComplexRational>(detail::load_json(matrix));
      const auto b = json_io::matrix_from_json<ComplexRational>(detail::load_json(matrix_b));
      if (a.cols() != b.rows() || a.rows() != b.cols()) throw ShapeError("sylvester: need A m x n and B n x m");
      const auto lhs = det_exact(CMatrix::identity(a.rows()) - a * b);
      const auto rhs = det_exact(CMatrix::identity(b.rows()) - b * a);
      auto scalar = [](const ComplexRational& z) { return z.is_real() ? json_io::to_json(z.real()) : json_io::to_json(z); };
      result["lhs"] = scalar(lhs);
      result["rhs"] = scalar(rhs);
      result["equal"] = lhs == rhs;
      if (lhs != rhs) code = kVerificationFailure;
    };
  });

  auto* mac = app.add_subcommand("macmahon-verify", "series coefficients vs alpha-permanents of dilations");
  mac->add_option("--matrix", matrix)->required();
  mac->add_option("--alpha", alpha_arg)->required();
  mac->add_option("--degree", degree, "total degree bound")->check(CLI::Range(0u, 12u));
  mac->add_option("--identity", identity, "per, det or both")->check(CLI::IsMember({"per", "det", "both"}));
  mac->callback([&] {
    action = [&] {
      auto any = json_io::any_matrix_from_json(detail::load_json(matrix));
      const Alpha a = alpha();
      std::size_t checked = 0, mismatches = 0;
      std::visit([&](const auto& m) {
        using T = std::decay_t<decltype(m(0, 0))>;
        auto run = [&](const CoefficientMap<T>& coeffs, bool det) {
          for (std::uint32_t k = 0; k <= degree; ++k)
            for_each_of_degree(m.rows(), k, [&](const MultiIndex& nn) {
              auto it = coeffs.find(nn);
              const T series = it == coeffs.end() ? T(0) : it->second;
              const auto d = dilate(m, nn);
              const T direct = det ? det_alpha(d, a) : per_alpha(d, a);
              ++checked;
              if (series * T(nn.factorial()) != direct) ++mismatches;
            });
        };
        if (identity != "det") run(macmahon_per_coeffs(m, a, degree), false);
        if (identity != "per") run(macmahon_det_coeffs(m, a, degree), true);
      }, any);
      result["checked"] = checked;
      result["mismatches"] = mismatches;
      if (mismatches) code = kVerificationFailure;
    };
  });

  auto add_poly = [&](CLI::App* s) {
    s->add_option("--poly", poly_arg, "product:n, esym:n:k, lorentz:n, symdet:n, or JSON terms")->required();
    s->add_option("--direction", direction, "hyperbolicity direction e");
    s->add_option("--trials", trials, "sampled lines");
  };
  auto certified = [&](std::uint64_t s) {
    const auto p = detail::parse_poly(poly_arg);
    return certify_hyperbolic(p.h, detail::direction_for(p, direction), trials, s);
  };

  auto* hc = app.add_subcommand("hyperbolic-certify", "sampled real-rootedness certification");
  add_poly(hc);
  add_seed(hc);
  hc->callback([&] {
    action = [&] {
      const auto inst = certified(need_seed());
      result = json_io::to_json(inst.cert);
      result["degree"] = inst.degree;
      if (!inst.certified()) code = kVerificationFailure;
    };
  });

  auto* cm = app.add_subcommand("cone-member", "membership in the open hyperbolicity cone");
  add_poly(cm);
  add_seed(cm);
  cm->add_option("--point", point)->required();
  cm->callback([&] {
    action = [&] {
      const auto inst = certified(need_seed());
      result["member"] = cone_member(inst, detail::parse_vector(point));
      result["certificate"] = json_io::to_json(inst.cert);
    };
  });

  auto* md = app.add_subcommand("mixed-disc", "mixed discriminant of n symmetric n x n matrices");
  md->add_option("--matrices", matrix, "JSON array of matrices")->required();
  md->callback([&] {
    action = [&] {
      const auto ms = detail::parse_matrix_list(matrix);
      result["value"] = json_io::to_json(mixed_discriminant<Rational>(ms));
    };
  });

  auto* pol = app.add_subcommand("polarize", "complete or partial polarization");
  pol->add_option("--poly", poly_arg)->required();
  pol->add_option("--vectors", vectors, "JSON array of vectors")->required();
  pol->callback([&] {
    action = [&] {
      const auto p = detail::parse_poly(poly_arg);
      const auto vs = json_io::vectors_from_json(detail::load_json(vectors));
      if (vs.size() == static_cast<std::size_t>(p.h.degree()))
        result["value"] = json_io::to_json(polarized_form(p.h, vs));
      else
        result["polynomial"] = json_io::poly_to_json(partial_polarization(p.h, vs));
    };
  });

  auto add_quotient = [&](CLI::App* s) {
    s->add_option("--mode", mode)->check(CLI::IsMember({"bapat", "hyperbolic", "mixed-discriminant"}));
    s->add_option("--fixed", fixed, "b_0..b_k as vectors (matrices in mixed-discriminant mode)")->required();
    s->add_option("--poly", poly_arg, "hyperbolic mode polynomial");
    s->add_option("--direction", direction);
    s->add_option("--trials", trials, "certification lines");
    s->add_option("--radius", radius, "cone sampling box radius");
    s->add_flag("--invert", invert, "use the reciprocal quotient (negative control)");
    add_seed(s);
  };
  auto quotient_spec = [&](std::uint64_t s) {
    QuotientSpec spec;
    if (mode == "bapat") {
      spec = QuotientSpec::bapat(json_io::vectors_from_json(detail::load_json(fixed)));
    } else if (mode == "hyperbolic") {
      if (poly_arg.empty()) throw ParseError("--poly is required in hyperbolic mode");
      const auto inst = certified(s);
      if (!inst.certified()) throw PreconditionError("concavity: polynomial failed hyperbolicity certification");
      spec = QuotientSpec::hyperbolic(inst, json_io::vectors_from_json(detail::load_json(fixed)));
    } else {
      spec = QuotientSpec::mixed_discriminant(detail::parse_matrix_list(fixed), trials, s);
    }
    spec.inverted = invert;
    spec.sample_radius = Rational::parse(radius);
    return spec;
  };

  auto* cs = app.add_subcommand("concavity-scan", "exact midpoint concavity scan");
  add_quotient(cs);
  cs->add_option("--samples", samples);
  cs->callback([&] {
    action = [&] {
      const auto s = need_seed();
      const auto r = midpoint_concavity_scan(quotient_spec(s), samples, s);
      result = json_io::to_json(r);
      if (r.violations) code = kVerificationFailure;
    };
  });

  auto* hs = app.add_subcommand("hessian-check", "floating-point Hessian eigenvalue check");
  add_quotient(hs);
  hs->add_option("--points", points);
  hs->add_option("--tol", tol);
  hs->callback([&] {
    action = [&] {
      const auto s = need_seed();
      const auto r = hessian_nsd_check(quotient_spec(s), points, tol, s);
      result = json_io::to_json(r);
      if (r.violations) code = kVerificationFailure;
    };
  });

  auto* ca = app.add_subcommand("classify-alpha", "membership of alpha for the real or complex field");
  ca->add_option("--alpha", alpha_arg)->required();
  ca->add_option("--field", field_arg)->check(CLI::IsMember({"real", "complex"}));
  ca->callback([&] {
    action = [&] { result = json_io::to_json(classify_alpha(alpha().value(), parse_field(field_arg))); };
  });

  auto* nn = app.add_subcommand("nonneg-scan", "exact nonnegativity scan for a member alpha");
  nn->add_option("--alpha", alpha_arg)->required();
  nn->add_option("--field", field_arg)->check(CLI::IsMember({"real", "complex"}));
  nn->add_option("--max-size", max_size);
  nn->add_option("--samples", samples);
  add_seed(nn);
  nn->callback([&] {
    action = [&] {
      const auto s = need_seed();
      const auto r = detail::with_field(parse_field(field_arg), [&](auto tag) {
        return nonnegativity_scan<decltype(tag)>(alpha().value(), max_size, samples, s);
      });
      result = json_io::to_json(r);
      if (r.violations) code = kVerificationFailure;
    };
  });

  auto* fw = app.add_subcommand("find-witness", "PSD matrix with negative alpha-determinant");
  fw->add_option("--alpha", alpha_arg)->required();
  fw->add_option("--field", field_arg)->check(CLI::IsMember({"real", "complex"}));
  fw->add_option("--degree", witness_degree, "graded search degree budget");
  fw->add_option("--retries", retries, "random weight retries");
  fw->add_option("--y", y_arg, "weights of the first attempt");
  fw->add_option("--escalate-to", escalate_to, "box search total degree after the graded search");
  fw->add_option("--term-budget", term_budget);
  fw->add_option("--work-budget", work_budget);
  fw->add_option("--output", output, "also write the witness JSON to this file");
  add_seed(fw);
  fw->callback([&] {
    action = [&] {
      WitnessSearchOptions o;
      o.max_degree = witness_degree;
      o.retries = retries;
      o.seed = need_seed();
      o.escalate_to = escalate_to;
      o.term_budget = term_budget;
      o.work_budget = work_budget;
      if (!y_arg.empty()) o.y = detail::parse_vector(y_arg);
      detail::with_field(parse_field(field_arg), [&](auto tag) {
        const auto outcome = find_witness<decltype(tag)>(alpha().value(), o);
        result = json_io::to_json(outcome);
        if (outcome.exhausted()) code = kVerificationFailure;
        if (!output.empty() && outcome.witness) {
          std::ofstream f(output, std::ios::binary);
          if (!f) throw ParseError("cannot write '" + output + "'");
          f << json_io::dump(json_io::witness_to_json(*outcome.witness));
        }
        return 0;
      });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "alphaperm 1.0.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    action();
  } catch (const ParseError& e) {
    err << "error: input: " << e.what() << "\n";
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "error: precondition: " << e.what() << "\n";
    return kUsageError;
  } catch (const Json::exception& e) {
    err << "error: input: " << e.what() << "\n";
    return kUsageError;
  }
  out << json_io::dump(result);
  return code;
}

inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"alphaperm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace alphaperm::cli
