#pragma once

// JSON forms of the library's results. Coefficients and matrix entries are
// decimal strings so no consumer loses precision.

#include <json.hpp>

#include <string>

#include "cyclorth/cyclotomic.hpp"
#include "cyclorth/structure.hpp"

namespace cyclorth::json {

using Json = nlohmann::json;

[[nodiscard]] Json from_poly(const IntPoly& f);
[[nodiscard]] Json from_poly(const RatPoly& f);
[[nodiscard]] IntPoly to_int_poly(const Json& j);
[[nodiscard]] RatPoly to_rat_poly(const Json& j);

[[nodiscard]] Json from_stats(const CoeffStats& s);
[[nodiscard]] CoeffStats to_stats(const Json& j);

[[nodiscard]] Json from_violation(const Violation& v);
[[nodiscard]] Violation to_violation(const Json& j);

/// The `result` object of a certificate. The timestamp is only written when
/// asked for, so command output stays byte-for-byte reproducible.
[[nodiscard]] Json certificate_result(const VerificationCertificate& cert, bool with_timestamp);
[[nodiscard]] VerificationCertificate to_certificate(const Json& envelope);

[[nodiscard]] Json from_gram(const GramReport& report);
[[nodiscard]] GramReport to_gram(const Json& j);

/// {command, parameters, result, version} and nothing else.
[[nodiscard]] Json envelope(const std::string& command, Json parameters, Json result);

/// Full certificate document as written by `verify --certificate`.
[[nodiscard]] Json certificate_document(const VerificationCertificate& cert);

}  // namespace cyclorth::json
