#include "shiftlim/endomorphism.hpp"

#include <string>
#include <utility>

namespace shiftlim {

Endomorphism::Endomorphism(IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) {
    throw DimensionError("an endomorphism of Z^r needs a square matrix, got " +
                         std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
  }
}

bool lattice_contains(const LatticeBasis& basis, const IntVector& v) {
  if (v.size() != basis.ambient_dim) {
    throw DimensionError("vector length does not match the ambient dimension");
  }
  if (basis.empty()) return is_zero_vector(v);
  const IntMatrix b = IntMatrix::from_columns(basis.ambient_dim, basis.vectors);
  return solve_integer(b, v).has_value();
}

std::size_t stabilization_index(const Endomorphism& e) {
  const std::size_t r = e.rank();
  std::size_t prev = r;  // rank of matrix^0
  IntMatrix power = e.matrix();
  for (std::size_t s = 0; s < r; ++s) {
    const std::size_t cur = rational_rank(power);
    if (cur == prev) return s;
    prev = cur;
    power = power * e.matrix();
  }
  // Ranks r = rank(A^0) > ... strictly decrease until they stabilize, so
  // stabilization happens at the latest at power r.
  return r;
}

LatticeBasis eventual_kernel_basis(const Endomorphism& e) {
  const std::size_t s = stabilization_index(e);
  return LatticeBasis{e.rank(), integer_kernel_basis(e.power(s))};
}

LatticeBasis intertwiner_lattice(const Endomorphism& a, const Endomorphism& b) {
  const std::size_t ra = a.rank();
  const std::size_t rb = b.rank();
  const std::size_t dim = rb * ra;
  // Equation (i,j) of X·a = b·X in the row-major unknowns x_{p,q} = X(p,q):
  //   sum_q a(q,j)·x_{i,q} - sum_p b(i,p)·x_{p,j} = 0.
  IntMatrix system(dim, dim);
  for (std::size_t i = 0; i < rb; ++i) {
    for (std::size_t j = 0; j < ra; ++j) {
      const std::size_t eq = i * ra + j;
      for (std::size_t q = 0; q < ra; ++q) system(eq, i * ra + q) += a.matrix()(q, j);
      for (std::size_t p = 0; p < rb; ++p) system(eq, p * ra + j) -= b.matrix()(i, p);
    }
  }
  return LatticeBasis{dim, integer_kernel_basis(system)};
}

IntMatrix unvectorize(const IntVector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) {
    throw DimensionError("vector length does not match the requested shape");
  }
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

IntVector vectorize(const IntMatrix& m) { return m.entries(); }

}  // namespace shiftlim
