#pragma once

#include <cstdint>
#include <random>

#include "shiftlim/int_matrix.hpp"

namespace shiftlim {

/// Deterministic sampler for exercising algebraic laws on random inputs.
/// Values are drawn from mt19937_64 through plain modulo so the stream is
/// identical on every platform (std distributions are not portable).
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform-ish integer in [lo, hi], inclusive.
  long int_in(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
  }

  // Index in [0, count).
  std::size_t index(std::size_t count) { return static_cast<std::size_t>(next() % count); }

 private:
  std::mt19937_64 engine_;
};

inline IntVector sample_vector(SampleRng& rng, std::size_t length, long bound) {
  IntVector v(length);
  for (auto& e : v) e = rng.int_in(-bound, bound);
  return v;
}

inline IntMatrix sample_matrix(SampleRng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.int_in(-bound, bound);
  return m;
}

/// Random unimodular matrix: a product of `ops` elementary row operations
/// (transvections with small coefficients, swaps, sign flips) applied to the
/// identity. Determinant is always ±1.
inline IntMatrix sample_unimodular(SampleRng& rng, std::size_t n, std::size_t ops) {
  IntMatrix m = IntMatrix::identity(n);
  if (n == 1) {
    if (rng.index(2) == 1) m(0, 0) = -1;
    return m;
  }
  for (std::size_t k = 0; k < ops; ++k) {
    const std::size_t i = rng.index(n);
    std::size_t j = rng.index(n - 1);
    if (j >= i) ++j;
    switch (rng.index(3)) {
      case 0:
        m.add_multiple_of_row(i, j, Int(rng.int_in(-2, 2)));
        break;
      case 1:
        m.swap_rows(i, j);
        break;
      default:
        m.negate_row(i);
        break;
    }
  }
  return m;
}

}  // namespace shiftlim
