#pragma once

#include <json.hpp>

#include <cstdio>
#include <string>

#include "sawsine/duality.hpp"
#include "sawsine/family.hpp"
#include "sawsine/measure.hpp"
#include "sawsine/rational.hpp"
#include "sawsine/sawtooth.hpp"
#include "sawsine/sine.hpp"
#include "sawsine/version.hpp"

namespace sawsine {

// ordered_json keeps keys in insertion order, so serialized documents follow
// the documented schemas byte for byte.
using json = nlohmann::ordered_json;

/// 17-significant-digit decimal form used for every real-valued field.
inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline double parse_real(const std::string& s) { return std::stod(s); }

// ---- serialization ---------------------------------------------------------

inline json to_json(const CoefficientVector& b) {
  json coeffs = json::array();
  for (const Rational& c : b.coeffs) coeffs.push_back(to_string(c));
  return json{{"family", family_name(b.family)}, {"m", b.m}, {"coeffs", std::move(coeffs)}};
}

inline json to_json(const TrigCombination& a) {
  json coeffs = json::array();
  for (double c : a.coeffs) coeffs.push_back(format_real(c));
  return json{{"family", "sine"}, {"m", a.m}, {"coeffs", std::move(coeffs)}};
}

inline json to_json(const ExactMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms) atoms.push_back(json{{"x", to_string(a.x)}, {"mass", to_string(a.mass)}});
  return json{{"atoms", std::move(atoms)}};
}

inline json to_json(const RealMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms)
    atoms.push_back(json{{"x", format_real(a.x)}, {"mass", format_real(a.mass)}});
  return json{{"atoms", std::move(atoms)}};
}

inline json to_json(const VerificationCertificate& cert) {
  json argmax = json::array();
  for (const Rational& x : cert.argmax) argmax.push_back(to_string(x));
  return json{{"mode", "exact"},
              {"max", to_string(cert.max_value)},
              {"argmax", std::move(argmax)},
              {"passed", cert.passed}};
}

inline json to_json(const GridCertificate& cert) {
  json residuals = json::array();
  for (const auto& r : cert.support_residuals)
    residuals.push_back(json{{"point", format_real(r.point)},
                             {"f_error", format_real(r.f_error)},
                             {"derivative", format_real(r.derivative)}});
  return json{{"mode", "certified-grid"},
              {"grid_size", cert.grid_size},
              {"grid_max", format_real(cert.grid_max)},
              {"argmax_x", format_real(cert.argmax_x)},
              {"grid_min", format_real(cert.grid_min)},
              {"lipschitz_constant", format_real(cert.lipschitz_constant)},
              {"certified_upper_bound", format_real(cert.certified_upper_bound)},
              {"endpoint_residual", format_real(cert.endpoint_residual)},
              {"support_residuals", std::move(residuals)},
              {"passed", cert.passed}};
}

inline json to_json(const SawtoothDualityReport& rep) {
  return json{{"family", "sawtooth"},
              {"m", rep.m},
              {"dual_value", to_string(rep.dual_value)},
              {"primal_value", to_string(rep.primal_value)},
              {"dual_iterations", rep.dual_iterations},
              {"primal_iterations", rep.primal_iterations},
              {"matches_closed_forms", rep.matches_closed_forms},
              {"product_is_one", rep.product_is_one},
              {"passed", rep.passed()}};
}

inline json to_json(const SineDualityReport& rep) {
  json grids = json::array();
  for (long n : rep.grid_sizes) grids.push_back(n);
  json values = json::array();
  for (double v : rep.dual_values) values.push_back(format_real(v));
  return json{{"family", "sine"},
              {"m", rep.m},
              {"grid_sizes", std::move(grids)},
              {"dual_values", std::move(values)},
              {"cm", format_real(rep.cm_value)},
              {"final_relative_gap", format_real(rep.final_relative_gap)},
              {"primal_value", format_real(rep.primal_value)},
              {"primal_gap", format_real(rep.primal_gap)},
              {"duality_product_gap", format_real(rep.duality_product_gap)},
              {"monotone", rep.monotone},
              {"passed", rep.passed()}};
}

// ---- parsing (schema round-trips) ------------------------------------------

inline CoefficientVector coefficient_vector_from_json(const json& j) {
  CoefficientVector b;
  b.family = parse_family(j.at("family").get<std::string>());
  b.m = j.at("m").get<int>();
  for (const auto& c : j.at("coeffs")) b.coeffs.push_back(parse_rational(c.get<std::string>()));
  if (static_cast<int>(b.coeffs.size()) != b.m)
    throw std::invalid_argument("coefficient vector: length differs from m");
  return b;
}

inline TrigCombination trig_combination_from_json(const json& j) {
  if (parse_family(j.at("family").get<std::string>()) != Family::sine)
    throw std::invalid_argument("trig combination: family must be sine");
  TrigCombination a;
  a.m = j.at("m").get<int>();
  for (const auto& c : j.at("coeffs")) a.coeffs.push_back(parse_real(c.get<std::string>()));
  if (static_cast<int>(a.coeffs.size()) != a.m)
    throw std::invalid_argument("trig combination: length differs from m");
  return a;
}

inline ExactMeasure exact_measure_from_json(const json& j) {
  ExactMeasure mu;
  for (const auto& a : j.at("atoms"))
    mu.atoms.push_back({parse_rational(a.at("x").get<std::string>()),
                        parse_rational(a.at("mass").get<std::string>())});
  return mu;
}

inline RealMeasure real_measure_from_json(const json& j) {
  RealMeasure mu;
  for (const auto& a : j.at("atoms"))
    mu.atoms.push_back({parse_real(a.at("x").get<std::string>()),
                        parse_real(a.at("mass").get<std::string>())});
  return mu;
}

inline VerificationCertificate certificate_from_json(const json& j) {
  if (j.at("mode").get<std::string>() != "exact")
    throw std::invalid_argument("certificate: expected exact mode");
  VerificationCertificate cert;
  cert.max_value = parse_rational(j.at("max").get<std::string>());
  for (const auto& x : j.at("argmax")) cert.argmax.push_back(parse_rational(x.get<std::string>()));
  cert.passed = j.at("passed").get<bool>();
  return cert;
}

inline GridCertificate grid_certificate_from_json(const json& j) {
  if (j.at("mode").get<std::string>() != "certified-grid")
    throw std::invalid_argument("certificate: expected certified-grid mode");
  GridCertificate cert;
  cert.grid_size = j.at("grid_size").get<long>();
  cert.grid_max = parse_real(j.at("grid_max").get<std::string>());
  cert.argmax_x = parse_real(j.at("argmax_x").get<std::string>());
  cert.grid_min = parse_real(j.at("grid_min").get<std::string>());
  cert.lipschitz_constant = parse_real(j.at("lipschitz_constant").get<std::string>());
  cert.certified_upper_bound = parse_real(j.at("certified_upper_bound").get<std::string>());
  cert.endpoint_residual = parse_real(j.at("endpoint_residual").get<std::string>());
  for (const auto& r : j.at("support_residuals"))
    cert.support_residuals.push_back({parse_real(r.at("point").get<std::string>()),
                                      parse_real(r.at("f_error").get<std::string>()),
                                      parse_real(r.at("derivative").get<std::string>())});
  cert.passed = j.at("passed").get<bool>();
  return cert;
}

/// Uniform wrapper around every CLI payload.
inline json make_envelope(const std::string& command, json parameters, json payload) {
  return json{{"command", command},
              {"parameters", std::move(parameters)},
              {"payload", std::move(payload)},
              {"version", version}};
}

}  // namespace sawsine
