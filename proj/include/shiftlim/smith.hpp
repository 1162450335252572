#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "shiftlim/int_matrix.hpp"

namespace shiftlim {

/// Smith normal form u·m·v = d with u, v unimodular and d diagonal,
/// every diagonal entry nonnegative and dividing the next.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  std::size_t diagonal_rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Rank over the rationals, i.e. the number of nonzero invariant factors.
std::size_t rational_rank(const IntMatrix& m);

/// Basis of the saturated integer kernel {x : m·x = 0}. The vectors are the
/// columns of v matching zero invariant factors, so the lattice they span is
/// exactly the rational kernel intersected with the integer points.
std::vector<IntVector> integer_kernel_basis(const IntMatrix& m);
std::vector<IntVector> integer_kernel_basis(const SmithDecomposition& snf);

/// One integer solution y of m·y = rhs, if any exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& rhs);
std::optional<IntVector> solve_integer(const SmithDecomposition& snf, const IntVector& rhs);

}  // namespace shiftlim
