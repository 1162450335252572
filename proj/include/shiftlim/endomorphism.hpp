#pragma once

#include <cstddef>
#include <vector>

#include "shiftlim/int_matrix.hpp"
#include "shiftlim/smith.hpp"

namespace shiftlim {

/// Endomorphism of Z^r, acting on column vectors by a square integer matrix.
class Endomorphism {
 public:
  explicit Endomorphism(IntMatrix matrix);

  std::size_t rank() const { return matrix_.rows(); }
  const IntMatrix& matrix() const { return matrix_; }
  IntMatrix power(std::size_t k) const { return mat_pow(matrix_, k); }

  bool operator==(const Endomorphism&) const = default;

 private:
  IntMatrix matrix_;
};

/// Integer lattice spanned by `vectors` inside Z^ambient_dim.
/// The vectors are linearly independent over the rationals; an empty list
/// describes the zero lattice.
struct LatticeBasis {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> vectors;

  std::size_t size() const { return vectors.size(); }
  bool empty() const { return vectors.empty(); }
};

/// True iff v is an integer combination of the basis vectors.
bool lattice_contains(const LatticeBasis& basis, const IntVector& v);

/// Minimal s >= 0 with rank_Q(matrix^s) = rank_Q(matrix^{s+1}). The kernels
/// of all powers from s on coincide; s never exceeds the rank.
std::size_t stabilization_index(const Endomorphism& e);

/// Basis of the saturated lattice {g : matrix^s · g = 0} with s the
/// stabilization index; the vectors annihilated by some power of the map.
LatticeBasis eventual_kernel_basis(const Endomorphism& e);

/// Lattice of all integer matrices X with X·a = b·X, vectorized row-major
/// (X is b.rank × a.rank, ambient dimension b.rank·a.rank).
LatticeBasis intertwiner_lattice(const Endomorphism& a, const Endomorphism& b);

/// Row-major reshape of a vector of length rows·cols.
IntMatrix unvectorize(const IntVector& v, std::size_t rows, std::size_t cols);
IntVector vectorize(const IntMatrix& m);

}  // namespace shiftlim
