#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "shiftlim/direct_limit.hpp"
#include "shiftlim/shift_equiv.hpp"

namespace shiftlim {

inline constexpr std::size_t kDefaultIsoSamples = 64;
inline constexpr std::uint64_t kDefaultSampleSeed = 1729;

/// Computable isomorphism between two simple direct limits, stored as the
/// images of the level-0 standard basis classes in both directions. The
/// forward map extends by linearity and commutes with the coshifts by
/// construction: (g, n) goes to the coshift applied n times to the
/// coefficient combination of the forward images. The backward list
/// represents the inverse map the same way.
struct LimitIso {
  DirectLimitGroup source;
  DirectLimitGroup target;
  std::vector<LimitElement> forward_images;   // one per source generator
  std::vector<LimitElement> backward_images;  // one per target generator
};

/// Build a LimitIso, checking only shapes (counts and vector lengths).
/// Semantic invariants are the business of verify_limit_iso.
LimitIso make_limit_iso(DirectLimitGroup source, DirectLimitGroup target,
                        std::vector<LimitElement> forward_images,
                        std::vector<LimitElement> backward_images);

/// Forward map applied to an element of the source limit.
LimitElement apply_limit_hom(const LimitIso& iso, const LimitElement& x);

/// The same data read backwards: source and target swapped.
LimitIso inverse_iso(const LimitIso& iso);

struct IsoReport {
  bool ok = true;
  std::vector<std::string> diagnostics;

  explicit operator bool() const { return ok; }
};

/// Check the invariants that make the stored data a genuine isomorphism
/// intertwining the induced automorphisms:
///  - well-definedness: eventual-kernel basis vectors map to the identity,
///    in both directions (exact);
///  - intertwining on the generators, in both directions (exact);
///  - generator round trips: backward∘forward and forward∘backward are the
///    identity on the respective generators (exact);
///  - intertwining on `samples` pseudorandom elements (deterministic seed).
/// Returns ok = false with one diagnostic per violated invariant.
IsoReport verify_limit_iso(const LimitIso& iso, std::size_t samples = kDefaultIsoSamples,
                           std::uint64_t seed = kDefaultSampleSeed);

/// Certificate-to-conjugacy direction: a verified certificate between a and b yields a
/// conjugacy of the coshifts. Forward images are the phi columns at level 0;
/// backward images are the psi columns at level lag, so that the round trips
/// are literal identities rather than powers of the induced maps. Accepts
/// lag 0 (phi is then itself a conjugating isomorphism of the endomorphisms).
/// Throws InvalidCertificate when the certificate does not verify.
LimitIso shift_equiv_to_conjugacy(const Endomorphism& a, const Endomorphism& b,
                                  const ShiftEquivCert& cert);

/// Certificate extracted from a limit isomorphism, with the common levels
/// actually used on each side: the phi columns represent the forward images
/// at level forward_level, the psi columns the backward images at
/// backward_level, and lag = forward_level + backward_level.
struct BridgedCert {
  ShiftEquivCert cert;
  std::size_t forward_level = 0;   // common level of the forward images
  std::size_t backward_level = 0;  // common level of the backward images
};

/// Conjugacy-to-certificate direction: read a shift-equivalence certificate off a
/// verified limit isomorphism. Forward images are normalized to minimal
/// levels and lifted to a common level; the common level is raised above the
/// maximal minimal level just far enough (never more than the stabilization
/// index of the respective endomorphism) for all four relations to hold
/// bit-exactly. Throws InvalidIsoWitness when the witness does not verify.
BridgedCert conjugacy_to_shift_equiv(const LimitIso& iso);

}  // namespace shiftlim
