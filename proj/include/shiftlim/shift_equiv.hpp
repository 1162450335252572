#pragma once

#include <cstddef>
#include <optional>

#include "shiftlim/endomorphism.hpp"

namespace shiftlim {

/// Certificate that phi, psi effect a shift equivalence of the given lag
/// between a source endomorphism a and a target endomorphism b:
///
///   phi·a = b·phi      psi·b = a·psi      psi·phi = a^lag      phi·psi = b^lag
///
/// phi is target.rank × source.rank, psi the transpose shape. Lag 0 is
/// admitted and means phi is a conjugating isomorphism with inverse psi.
/// Validity is decided by verify_cert, never assumed.
struct ShiftEquivCert {
  IntMatrix phi;
  IntMatrix psi;
  std::size_t lag = 0;

  bool operator==(const ShiftEquivCert&) const = default;
};

/// One flag per defining relation; the certificate is valid iff all hold.
struct VerifyReport {
  bool phi_intertwines = false;          // phi·a = b·phi
  bool psi_intertwines = false;          // psi·b = a·psi
  bool psi_phi_is_source_power = false;  // psi·phi = a^lag
  bool phi_psi_is_target_power = false;  // phi·psi = b^lag

  bool valid() const {
    return phi_intertwines && psi_intertwines && psi_phi_is_source_power &&
           phi_psi_is_target_power;
  }
};

/// Check all four relations bit-exactly.
VerifyReport verify_cert(const Endomorphism& a, const Endomorphism& b, const ShiftEquivCert& cert);

/// (a.matrix, a.matrix, lag 2); always valid since a commutes with itself.
ShiftEquivCert reflexive_cert(const Endomorphism& a);

/// (identity, identity, lag 0): the trivial self-conjugacy.
ShiftEquivCert identity_cert(const Endomorphism& a);

/// Swap phi and psi; valid from b to a whenever the input is valid from a to b.
ShiftEquivCert invert_cert(ShiftEquivCert cert);

/// Chain a->b and b->c into a->c: maps compose, lags add.
ShiftEquivCert compose_certs(const ShiftEquivCert& ab, const ShiftEquivCert& bc);

/// Bounded search for a certificate. Candidate maps are integer combinations
/// of the intertwiner-lattice bases with coefficients of absolute value at
/// most coeff_bound, so relations 1 and 2 hold by construction and only the
/// power relations need testing. Deterministic order: smallest lag first,
/// then lexicographic phi coefficients, then psi coefficients, with each
/// coefficient running through 0, 1, -1, 2, -2, ...
std::optional<ShiftEquivCert> search_shift_equivalence(const Endomorphism& a,
                                                       const Endomorphism& b,
                                                       std::size_t max_lag,
                                                       std::size_t coeff_bound);

/// The conjugating isomorphism a certificate yields when one exists: phi for
/// lag 0, and phi whenever both endomorphisms are automorphisms of Z^r (the
/// power relations then force phi unimodular). Throws InvalidCertificate if
/// the certificate does not verify.
std::optional<IntMatrix> conjugacy_from_cert(const Endomorphism& a, const Endomorphism& b,
                                             const ShiftEquivCert& cert);

}  // namespace shiftlim
