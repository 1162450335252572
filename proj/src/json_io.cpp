#include "shiftlim/json_io.hpp"

#include <cstddef>
#include <utility>

namespace shiftlim {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw JsonError(what + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw JsonError(what + ": missing field \"" + key + "\"");
  return *it;
}

std::size_t count_from_json(const json& j, const std::string& what) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) {
    return static_cast<std::size_t>(j.get<long long>());
  }
  throw JsonError(what + ": expected a non-negative integer");
}

}  // namespace

json int_to_json(const Int& value) { return json(value.str()); }

Int int_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer() || j.is_number_unsigned()) {
    // Exact within the parser's 64-bit range; larger literals arrive as
    // floating point and are rejected below.
    return Int(j.dump());
  }
  if (!j.is_string()) {
    throw JsonError(what + ": expected a decimal string (floating point is not accepted)");
  }
  const std::string s = j.get<std::string>();
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) throw JsonError(what + ": empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw JsonError(what + ": \"" + s + "\" is not a decimal integer");
    }
  }
  // cpp_int does not take a leading '+'.
  return Int(s[0] == '+' ? s.substr(1) : s);
}

json matrix_to_json(const IntMatrix& m) {
  json entries = json::array();
  for (const auto& e : m.entries()) entries.push_back(e.str());
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntMatrix matrix_from_json(const json& j) {
  const std::size_t rows = count_from_json(require_field(j, "rows", "matrix"), "matrix rows");
  const std::size_t cols = count_from_json(require_field(j, "cols", "matrix"), "matrix cols");
  if (rows == 0 || cols == 0) throw JsonError("matrix: dimensions must be positive");
  const json& entries = require_field(j, "entries", "matrix");
  if (!entries.is_array() || entries.size() != rows * cols) {
    throw JsonError("matrix: expected exactly rows*cols entries");
  }
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      m(i, k) = int_from_json(entries[i * cols + k], "matrix entry");
    }
  }
  return m;
}

Endomorphism endomorphism_from_json(const json& j) {
  IntMatrix m = matrix_from_json(j);
  if (!m.is_square()) throw JsonError("endomorphism: matrix must be square");
  return Endomorphism(std::move(m));
}

json element_to_json(const LimitElement& x) {
  json g = json::array();
  for (const auto& e : x.g) g.push_back(e.str());
  return json{{"g", std::move(g)}, {"n", x.level}};
}

LimitElement element_from_json(const json& j) {
  const json& g = require_field(j, "g", "element");
  if (!g.is_array() || g.empty()) throw JsonError("element: \"g\" must be a nonempty array");
  LimitElement x;
  x.g.reserve(g.size());
  for (const auto& e : g) x.g.push_back(int_from_json(e, "element entry"));
  x.level = count_from_json(require_field(j, "n", "element"), "element level");
  return x;
}

json cert_to_json(const ShiftEquivCert& cert) {
  return json{{"phi", matrix_to_json(cert.phi)},
              {"psi", matrix_to_json(cert.psi)},
              {"lag", cert.lag}};
}

ShiftEquivCert cert_from_json(const json& j) {
  return ShiftEquivCert{matrix_from_json(require_field(j, "phi", "certificate")),
                        matrix_from_json(require_field(j, "psi", "certificate")),
                        count_from_json(require_field(j, "lag", "certificate"), "certificate lag")};
}

json iso_to_json(const LimitIso& iso, const std::string& a_ref, const std::string& b_ref) {
  json forward = json::array();
  for (const auto& e : iso.forward_images) forward.push_back(element_to_json(e));
  json backward = json::array();
  for (const auto& e : iso.backward_images) backward.push_back(element_to_json(e));
  json out{{"forward", std::move(forward)}, {"backward", std::move(backward)}};
  if (!a_ref.empty()) out["a_ref"] = a_ref;
  if (!b_ref.empty()) out["b_ref"] = b_ref;
  return out;
}

LimitIso iso_from_json(const json& j, Endomorphism source, Endomorphism target) {
  const json& fwd = require_field(j, "forward", "witness");
  const json& bwd = require_field(j, "backward", "witness");
  if (!fwd.is_array() || !bwd.is_array()) {
    throw JsonError("witness: \"forward\" and \"backward\" must be arrays");
  }
  std::vector<LimitElement> forward;
  forward.reserve(fwd.size());
  for (const auto& e : fwd) forward.push_back(element_from_json(e));
  std::vector<LimitElement> backward;
  backward.reserve(bwd.size());
  for (const auto& e : bwd) backward.push_back(element_from_json(e));
  return make_limit_iso(DirectLimitGroup(std::move(source)), DirectLimitGroup(std::move(target)),
                        std::move(forward), std::move(backward));
}

json report_to_json(const VerifyReport& report) {
  return json{{"relation_1", report.phi_intertwines},
              {"relation_2", report.psi_intertwines},
              {"relation_3", report.psi_phi_is_source_power},
              {"relation_4", report.phi_psi_is_target_power}};
}

}  // namespace shiftlim
