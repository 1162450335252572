#include "shiftlim/smith.hpp"

#include <algorithm>
#include <utility>

namespace shiftlim {

namespace {

// Nonzero entry of minimal absolute value in the trailing block starting at
// (t, t); returns false when the block is all zero.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best = 0;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Int a = abs(d(i, j));
      if (!found || a < best) {
        found = true;
        best = std::move(a);
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

std::size_t SmithDecomposition::diagonal_rank() const {
  const std::size_t n = std::min(d.rows(), d.cols());
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) != 0) ++r;
  }
  return r;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithDecomposition out{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& u = out.u;
  IntMatrix& d = out.d;
  IntMatrix& v = out.v;
  const std::size_t steps = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(d, t, pi, pj)) break;
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    for (;;) {
      // Clear column t, then row t. A nonzero remainder becomes the new,
      // strictly smaller pivot, so the loop terminates.
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        const Int q = d(i, t) / d(t, t);
        if (q != 0) {
          d.add_multiple_of_row(i, t, -q);
          u.add_multiple_of_row(i, t, -q);
        }
        if (d(i, t) != 0) {
          d.swap_rows(t, i);
          u.swap_rows(t, i);
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        const Int q = d(t, j) / d(t, t);
        if (q != 0) {
          d.add_multiple_of_col(j, t, -q);
          v.add_multiple_of_col(j, t, -q);
        }
        if (d(t, j) != 0) {
          d.swap_cols(t, j);
          v.swap_cols(t, j);
          clean = false;
          break;
        }
      }
      if (!clean) continue;

      // Divisibility: the pivot must divide the whole trailing block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < d.rows() && divisible; ++i) {
        for (std::size_t j = t + 1; j < d.cols() && divisible; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            d.add_multiple_of_row(t, i, 1);
            u.add_multiple_of_row(t, i, 1);
            divisible = false;
          }
        }
      }
      if (divisible) break;
    }
  }

  for (std::size_t t = 0; t < steps; ++t) {
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return out;
}

std::size_t rational_rank(const IntMatrix& m) { return smith_normal_form(m).diagonal_rank(); }

std::vector<IntVector> integer_kernel_basis(const SmithDecomposition& snf) {
  const std::size_t n = std::min(snf.d.rows(), snf.d.cols());
  std::vector<IntVector> basis;
  for (std::size_t j = 0; j < snf.d.cols(); ++j) {
    if (j >= n || snf.d(j, j) == 0) basis.push_back(snf.v.column(j));
  }
  return basis;
}

std::vector<IntVector> integer_kernel_basis(const IntMatrix& m) {
  return integer_kernel_basis(smith_normal_form(m));
}

std::optional<IntVector> solve_integer(const SmithDecomposition& snf, const IntVector& rhs) {
  const std::size_t rows = snf.d.rows();
  const std::size_t cols = snf.d.cols();
  const IntVector c = snf.u.apply(rhs);
  IntVector z(cols, Int(0));
  const std::size_t n = std::min(rows, cols);
  for (std::size_t i = 0; i < n; ++i) {
    const Int& di = snf.d(i, i);
    if (di != 0) {
      if (c[i] % di != 0) return std::nullopt;
      z[i] = c[i] / di;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  for (std::size_t i = n; i < rows; ++i) {
    if (c[i] != 0) return std::nullopt;
  }
  return snf.v.apply(z);
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& rhs) {
  if (rhs.size() != m.rows()) {
    throw DimensionError("right-hand side length does not match row count");
  }
  return solve_integer(smith_normal_form(m), rhs);
}

}  // namespace shiftlim
