#pragma once

#include <cstddef>
#include <vector>

#include "shiftlim/endomorphism.hpp"
#include "shiftlim/smith.hpp"

namespace shiftlim {

/// Representative (g, level) of an equivalence class in a simple direct
/// limit. operator== compares representatives; class equality is
/// DirectLimitGroup::equal.
struct LimitElement {
  IntVector g;
  std::size_t level = 0;

  bool operator==(const LimitElement&) const = default;
};

/// The simple direct limit of Z^r along an endomorphism A, as a concrete
/// group: classes of pairs (g, n), where (g, n) and (g', n') are identified
/// when high enough powers of A map them to the same vector.
///
/// Equality is decided finitely: with N = max(n, n') and
/// d = A^{N-n}·g - A^{N-n'}·g', the classes agree iff A^s·d = 0 for the
/// stabilization index s, because kernels of powers of A no longer grow
/// past s.
class DirectLimitGroup {
 public:
  explicit DirectLimitGroup(Endomorphism endo);

  const Endomorphism& endo() const { return endo_; }
  std::size_t rank() const { return endo_.rank(); }
  std::size_t stabilization() const { return stab_; }
  const LatticeBasis& eventual_kernel() const { return kernel_; }

  LimitElement identity() const;
  /// The class of (g, 0).
  LimitElement embed(IntVector g) const;

  bool equal(const LimitElement& x, const LimitElement& y) const;
  bool is_identity(const LimitElement& x) const;

  /// (g, n)·(g', n') = (A^{n'}·g + A^{n}·g', n + n'), written additively.
  LimitElement add(const LimitElement& x, const LimitElement& y) const;
  LimitElement negate(const LimitElement& x) const;
  /// The coshift (g, n) -> (g, n + 1); an automorphism of the limit.
  LimitElement coshift(const LimitElement& x) const;
  /// The induced automorphism (g, n) -> (A·g, n); inverse of the coshift.
  LimitElement induced(const LimitElement& x) const;

  /// Representative of the same class with the smallest possible level,
  /// found by repeatedly solving A·g' = g modulo the eventual kernel.
  LimitElement normalize(const LimitElement& x) const;

  /// Same class re-represented at a level >= x.level: (A^{target-n}·g, target).
  LimitElement raised_to_level(const LimitElement& x, std::size_t target) const;

  /// Integer combination sum_i coeffs[i]·elems[i], computed at the common
  /// maximal level of the inputs.
  LimitElement combine(const IntVector& coeffs, const std::vector<LimitElement>& elems) const;

  /// (c·g, n); the c-fold sum of the class of (g, n).
  LimitElement scalar_multiple(const Int& c, const LimitElement& x) const;

  bool operator==(const DirectLimitGroup& other) const { return endo_ == other.endo_; }

 private:
  void check_member(const LimitElement& x) const;

  Endomorphism endo_;
  std::size_t stab_;
  IntMatrix stab_power_;      // A^s
  LatticeBasis kernel_;       // eventual kernel of A
  SmithDecomposition descent_snf_;  // of [A | kernel basis], for normalize
};

}  // namespace shiftlim
