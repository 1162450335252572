#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace shiftlim {

// Matrix or vector shapes do not line up.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An operation requiring a certificate that passes verification was handed
// one that does not.
struct InvalidCertificate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation requiring an isomorphism witness that passes verification was
// handed one that does not; `diagnostics` lists the violated invariants.
struct InvalidIsoWitness : std::runtime_error {
  InvalidIsoWitness(const std::string& message, std::vector<std::string> diags)
      : std::runtime_error(message), diagnostics(std::move(diags)) {}
  std::vector<std::string> diagnostics;
};

// Malformed or out-of-schema JSON input.
struct JsonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace shiftlim
