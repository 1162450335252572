#pragma once

#include <json.hpp>
#include <string>

#include "shiftlim/direct_limit.hpp"
#include "shiftlim/limit_iso.hpp"
#include "shiftlim/shift_equiv.hpp"

namespace shiftlim {

// File schemas. Integer entries are serialized as decimal strings so values
// of any size survive every JSON parser; on input, exact JSON integers are
// accepted too, but floating-point numbers are rejected.
//
//   matrix   {"rows": R, "cols": C, "entries": ["-12", "3", ...]}   row-major
//   element  {"g": ["1", "0"], "n": 0}
//   cert     {"phi": matrix, "psi": matrix, "lag": 1}
//   witness  {"forward": [element...], "backward": [element...],
//             "a_ref": "...", "b_ref": "..."}            (refs optional)

nlohmann::json int_to_json(const Int& value);
Int int_from_json(const nlohmann::json& j, const std::string& what);

nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

/// A matrix file read as an endomorphism; must be square.
Endomorphism endomorphism_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const LimitElement& x);
LimitElement element_from_json(const nlohmann::json& j);

nlohmann::json cert_to_json(const ShiftEquivCert& cert);
ShiftEquivCert cert_from_json(const nlohmann::json& j);

nlohmann::json iso_to_json(const LimitIso& iso, const std::string& a_ref = {},
                           const std::string& b_ref = {});
LimitIso iso_from_json(const nlohmann::json& j, Endomorphism source, Endomorphism target);

nlohmann::json report_to_json(const VerifyReport& report);

}  // namespace shiftlim
