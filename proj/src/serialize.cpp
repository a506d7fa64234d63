#include "cyclorth/serialize.hpp"

#include "cyclorth/numtheory.hpp"

namespace cyclorth::json {

namespace {

Integer parse_integer(const Json& j) {
  Integer v;
  if (!j.is_string() || v.set_str(j.get<std::string>(), 10) != 0) {
    throw std::invalid_argument("expected a decimal integer string, got " + j.dump());
  }
  return v;
}

Json from_degree(const Degree& d) { return d ? Json(*d) : Json(nullptr); }
Degree to_degree(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::size_t>();
}

}  // namespace

Json from_poly(const IntPoly& f) {
  Json arr = Json::array();
  for (const auto& c : f.coeffs()) arr.push_back(c.get_str());
  return arr;
}

Json from_poly(const RatPoly& f) {
  Json arr = Json::array();
  for (const auto& c : f.coeffs()) arr.push_back(c.get_str());
  return arr;
}

IntPoly to_int_poly(const Json& j) {
  std::vector<Integer> v;
  for (const auto& c : j) v.push_back(parse_integer(c));
  return IntPoly(std::move(v));
}

RatPoly to_rat_poly(const Json& j) {
  std::vector<Rational> v;
  for (const auto& c : j) v.push_back(parse_rational(c.get<std::string>()));
  return RatPoly(std::move(v));
}

Json from_stats(const CoeffStats& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients) coeffs.push_back(c.get_str());
  return {{"n", s.n},
          {"degree", from_degree(s.degree)},
          {"height", s.height.get_str()},
          {"nonzero_terms", s.nonzero_terms},
          {"coefficients", coeffs}};
}

CoeffStats to_stats(const Json& j) {
  CoeffStats s;
  s.n = j.at("n").get<std::uint64_t>();
  s.degree = to_degree(j.at("degree"));
  s.height = parse_integer(j.at("height"));
  s.nonzero_terms = j.at("nonzero_terms").get<std::size_t>();
  for (const auto& c : j.at("coefficients")) s.coefficients.push_back(parse_integer(c));
  return s;
}

Json from_violation(const Violation& v) {
  return {{"d1", v.d1}, {"l1", v.l1}, {"d2", v.d2}, {"l2", v.l2}, {"value", v.value.get_str()}};
}

Violation to_violation(const Json& j) {
  return {j.at("d1").get<std::uint64_t>(), j.at("l1").get<std::uint64_t>(),
          j.at("d2").get<std::uint64_t>(), j.at("l2").get<std::uint64_t>(),
          parse_integer(j.at("value"))};
}

Json certificate_result(const VerificationCertificate& cert, bool with_timestamp) {
  Json violations = Json::array();
  for (const auto& v : cert.violations) violations.push_back(from_violation(v));
  Json result = {{"checks_performed", cert.checks_performed},
                 {"pass", cert.pass},
                 {"violations", violations},
                 {"lemma_checked", cert.lemma_checked}};
  if (with_timestamp) result["timestamp"] = cert.timestamp;
  return result;
}

VerificationCertificate to_certificate(const Json& env) {
  VerificationCertificate cert;
  cert.n = env.at("parameters").at("n").get<std::uint64_t>();
  cert.version = env.at("version").get<std::string>();
  const Json& r = env.at("result");
  cert.checks_performed = r.at("checks_performed").get<std::uint64_t>();
  cert.pass = r.at("pass").get<bool>();
  cert.lemma_checked = r.at("lemma_checked").get<bool>();
  for (const auto& v : r.at("violations")) cert.violations.push_back(to_violation(v));
  if (r.contains("timestamp")) cert.timestamp = r.at("timestamp").get<std::string>();
  return cert;
}

Json from_gram(const GramReport& report) {
  Json ordering = Json::array();
  for (const auto& idx : report.ordering) ordering.push_back({idx.d, idx.l});
  Json entries = Json::array();
  for (const auto& e : report.matrix.data()) entries.push_back(e.get_str());
  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back(from_violation(v));
  return {{"n", report.n},
          {"ordering", ordering},
          {"entries", entries},
          {"block_diagonal", report.block_diagonal},
          {"violations", violations}};
}

GramReport to_gram(const Json& j) {
  GramReport report;
  report.n = j.at("n").get<std::uint64_t>();
  for (const auto& pair : j.at("ordering")) {
    report.ordering.push_back({pair.at(0).get<std::uint64_t>(), pair.at(1).get<std::uint64_t>()});
  }
  const auto& entries = j.at("entries");
  if (entries.size() != report.n * report.n) {
    throw std::invalid_argument("gram entries do not form an n x n matrix");
  }
  report.matrix = IntMatrix(report.n, report.n);
  for (std::size_t i = 0; i < report.n; ++i) {
    for (std::size_t k = 0; k < report.n; ++k) {
      report.matrix(i, k) = parse_integer(entries.at(i * report.n + k));
    }
  }
  report.block_diagonal = j.at("block_diagonal").get<bool>();
  for (const auto& v : j.at("violations")) report.violations.push_back(to_violation(v));
  return report;
}

Json envelope(const std::string& command, Json parameters, Json result) {
  return {{"command", command},
          {"parameters", std::move(parameters)},
          {"result", std::move(result)},
          {"version", version()}};
}

Json certificate_document(const VerificationCertificate& cert) {
  Json doc = envelope("verify", {{"n", cert.n}}, certificate_result(cert, true));
  doc["version"] = cert.version;
  return doc;
}

}  // namespace cyclorth::json
