#pragma once

// Test-only oracles. Each one recomputes a quantity the library provides,
// by a different route, so the two can be compared on random inputs.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>

#include "shiftlim/direct_limit.hpp"
#include "shiftlim/endomorphism.hpp"
#include "shiftlim/int_matrix.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

// Determinant by cofactor expansion along the first row.
inline shiftlim::Int det_cofactor(const shiftlim::IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  shiftlim::Int acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    shiftlim::IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t col = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        minor(i - 1, col++) = m(i, k);
      }
    }
    const shiftlim::Int term = m(0, j) * det_cofactor(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

// Rank over the rationals by fraction-free row elimination.
inline std::size_t rank_elimination(shiftlim::IntMatrix m) {
  std::size_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(row, p);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      const shiftlim::Int a = m(row, col);
      const shiftlim::Int b = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(i, j) = a * m(i, j) - b * m(row, j);
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Direct-limit equality by bounded search over the witness level. Witnesses
// beyond max-level + rank add nothing because kernels of powers stabilize.
inline bool limit_eq_bounded(const shiftlim::Endomorphism& e, const shiftlim::LimitElement& x,
                             const shiftlim::LimitElement& y) {
  const std::size_t base = std::max(x.level, y.level);
  for (std::size_t n = base; n <= base + e.rank() + 1; ++n) {
    const auto gx = shiftlim::mat_pow(e.matrix(), n - x.level).apply(x.g);
    const auto gy = shiftlim::mat_pow(e.matrix(), n - y.level).apply(y.g);
    if (gx == gy) return true;
  }
  return false;
}

// Value of an element of the limit along the doubling map: (g, n) -> g / 2^n.
inline Rational dyadic_value(const shiftlim::LimitElement& x) {
  shiftlim::Int denom = 1;
  denom <<= x.level;
  return Rational(x.g.at(0), denom);
}

}  // namespace oracle
