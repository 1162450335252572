#include "shiftlim/shift_equiv.hpp"

#include <string>
#include <utility>
#include <vector>

namespace shiftlim {

namespace {

void check_cert_shape(const Endomorphism& a, const Endomorphism& b, const ShiftEquivCert& cert) {
  if (cert.phi.rows() != b.rank() || cert.phi.cols() != a.rank()) {
    throw DimensionError("phi must be " + std::to_string(b.rank()) + "x" +
                         std::to_string(a.rank()) + ", got " + std::to_string(cert.phi.rows()) +
                         "x" + std::to_string(cert.phi.cols()));
  }
  if (cert.psi.rows() != a.rank() || cert.psi.cols() != b.rank()) {
    throw DimensionError("psi must be " + std::to_string(a.rank()) + "x" +
                         std::to_string(b.rank()) + ", got " + std::to_string(cert.psi.rows()) +
                         "x" + std::to_string(cert.psi.cols()));
  }
}

// All coefficient vectors of the given length with entries of absolute value
// at most bound, in lexicographic order over the per-coordinate sequence
// 0, 1, -1, 2, -2, ...; the all-zero vector comes first.
class CoefficientEnumerator {
 public:
  CoefficientEnumerator(std::size_t length, std::size_t bound) : digits_(length, 0) {
    values_.push_back(0);
    for (long v = 1; v <= static_cast<long>(bound); ++v) {
      values_.push_back(v);
      values_.push_back(-v);
    }
  }

  bool done() const { return done_; }

  IntVector current() const {
    IntVector out(digits_.size());
    for (std::size_t i = 0; i < digits_.size(); ++i) out[i] = values_[digits_[i]];
    return out;
  }

  void advance() {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < values_.size()) return;
      digits_[i] = 0;
    }
    done_ = true;  // odometer wrapped; for length 0 the single empty vector was it
  }

 private:
  std::vector<long> values_;
  std::vector<std::size_t> digits_;
  bool done_ = false;
};

std::vector<IntMatrix> enumerate_candidates(const LatticeBasis& basis, std::size_t rows,
                                            std::size_t cols, std::size_t bound) {
  std::vector<IntMatrix> out;
  for (CoefficientEnumerator it(basis.size(), bound); !it.done(); it.advance()) {
    const IntVector coeffs = it.current();
    IntVector vec(basis.ambient_dim, Int(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (coeffs[i] == 0) continue;
      vec = add(vec, scaled(coeffs[i], basis.vectors[i]));
    }
    out.push_back(unvectorize(vec, rows, cols));
  }
  return out;
}

}  // namespace

VerifyReport verify_cert(const Endomorphism& a, const Endomorphism& b, const ShiftEquivCert& cert) {
  check_cert_shape(a, b, cert);
  VerifyReport report;
  report.phi_intertwines = cert.phi * a.matrix() == b.matrix() * cert.phi;
  report.psi_intertwines = cert.psi * b.matrix() == a.matrix() * cert.psi;
  report.psi_phi_is_source_power = cert.psi * cert.phi == a.power(cert.lag);
  report.phi_psi_is_target_power = cert.phi * cert.psi == b.power(cert.lag);
  return report;
}

ShiftEquivCert reflexive_cert(const Endomorphism& a) {
  return ShiftEquivCert{a.matrix(), a.matrix(), 2};
}

ShiftEquivCert identity_cert(const Endomorphism& a) {
  return ShiftEquivCert{IntMatrix::identity(a.rank()), IntMatrix::identity(a.rank()), 0};
}

ShiftEquivCert invert_cert(ShiftEquivCert cert) {
  std::swap(cert.phi, cert.psi);
  return cert;
}

ShiftEquivCert compose_certs(const ShiftEquivCert& ab, const ShiftEquivCert& bc) {
  if (bc.phi.cols() != ab.phi.rows()) {
    throw DimensionError("middle dimensions of the certificates do not agree");
  }
  return ShiftEquivCert{bc.phi * ab.phi, ab.psi * bc.psi, ab.lag + bc.lag};
}

std::optional<ShiftEquivCert> search_shift_equivalence(const Endomorphism& a,
                                                       const Endomorphism& b,
                                                       std::size_t max_lag,
                                                       std::size_t coeff_bound) {
  if (coeff_bound < 1) {
    throw std::invalid_argument("coefficient bound must be at least 1");
  }
  // Members of the intertwiner lattices satisfy relations 1 and 2 exactly,
  // so the search only has to test the two power relations.
  const auto phis = enumerate_candidates(intertwiner_lattice(a, b), b.rank(), a.rank(), coeff_bound);
  const auto psis = enumerate_candidates(intertwiner_lattice(b, a), a.rank(), b.rank(), coeff_bound);
  for (std::size_t lag = 0; lag <= max_lag; ++lag) {
    const IntMatrix a_pow = a.power(lag);
    const IntMatrix b_pow = b.power(lag);
    for (const auto& phi : phis) {
      for (const auto& psi : psis) {
        if (psi * phi == a_pow && phi * psi == b_pow) {
          return ShiftEquivCert{phi, psi, lag};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<IntMatrix> conjugacy_from_cert(const Endomorphism& a, const Endomorphism& b,
                                             const ShiftEquivCert& cert) {
  if (!verify_cert(a, b, cert).valid()) {
    throw InvalidCertificate("certificate fails verification");
  }
  if (cert.lag == 0) return cert.phi;
  if (is_unimodular(a.matrix()) && is_unimodular(b.matrix())) return cert.phi;
  return std::nullopt;
}

}  // namespace shiftlim
