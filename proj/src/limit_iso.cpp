#include "shiftlim/limit_iso.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "shiftlim/sampling.hpp"

namespace shiftlim {

namespace {

constexpr long kSampleEntryBound = 3;
constexpr std::size_t kSampleMaxLevel = 3;

LimitElement sample_element(SampleRng& rng, const DirectLimitGroup& lim) {
  return LimitElement{sample_vector(rng, lim.rank(), kSampleEntryBound),
                      rng.index(kSampleMaxLevel + 1)};
}

// Forward map restricted to level 0: the combination of the images by the
// coordinates of g.
LimitElement map_vector(const DirectLimitGroup& codomain, const std::vector<LimitElement>& images,
                        const IntVector& g) {
  return codomain.combine(g, images);
}

void check_one_direction(const DirectLimitGroup& from, const DirectLimitGroup& to,
                         const std::vector<LimitElement>& images, const char* label,
                         IsoReport& report) {
  auto fail = [&](const std::string& msg) {
    report.ok = false;
    report.diagnostics.push_back(msg);
  };

  // Well-definedness: a vector killed by a power of the endomorphism is the
  // identity class at level 0, so its image must be the identity class too.
  const auto& kernel = from.eventual_kernel();
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    if (!to.is_identity(map_vector(to, images, kernel.vectors[i]))) {
      fail(std::string(label) + " map is not well-defined: eventual-kernel basis vector #" +
           std::to_string(i) + " maps to a non-identity class");
    }
  }

  // Intertwining on generators: mapping A·e_j agrees with applying the
  // induced automorphism of the codomain to the image of e_j.
  for (std::size_t j = 0; j < from.rank(); ++j) {
    const LimitElement lhs = map_vector(to, images, from.endo().matrix().column(j));
    const LimitElement rhs = to.induced(images[j]);
    if (!to.equal(lhs, rhs)) {
      fail(std::string(label) + " map does not intertwine the induced automorphisms (generator #" +
           std::to_string(j) + ")");
    }
  }
}

}  // namespace

LimitIso make_limit_iso(DirectLimitGroup source, DirectLimitGroup target,
                        std::vector<LimitElement> forward_images,
                        std::vector<LimitElement> backward_images) {
  if (forward_images.size() != source.rank()) {
    throw DimensionError("expected one forward image per source generator");
  }
  if (backward_images.size() != target.rank()) {
    throw DimensionError("expected one backward image per target generator");
  }
  for (const auto& e : forward_images) {
    if (e.g.size() != target.rank()) {
      throw DimensionError("forward image rank does not match the target group");
    }
  }
  for (const auto& e : backward_images) {
    if (e.g.size() != source.rank()) {
      throw DimensionError("backward image rank does not match the source group");
    }
  }
  return LimitIso{std::move(source), std::move(target), std::move(forward_images),
                  std::move(backward_images)};
}

LimitElement apply_limit_hom(const LimitIso& iso, const LimitElement& x) {
  if (x.g.size() != iso.source.rank()) {
    throw DimensionError("element rank does not match the source group");
  }
  LimitElement combo = iso.target.combine(x.g, iso.forward_images);
  combo.level += x.level;
  return combo;
}

LimitIso inverse_iso(const LimitIso& iso) {
  return LimitIso{iso.target, iso.source, iso.backward_images, iso.forward_images};
}

IsoReport verify_limit_iso(const LimitIso& iso, std::size_t samples, std::uint64_t seed) {
  IsoReport report;
  auto fail = [&](const std::string& msg) {
    report.ok = false;
    report.diagnostics.push_back(msg);
  };

  if (iso.forward_images.size() != iso.source.rank() ||
      iso.backward_images.size() != iso.target.rank()) {
    fail("image counts do not match the group ranks");
    return report;
  }
  for (const auto& e : iso.forward_images) {
    if (e.g.size() != iso.target.rank()) {
      fail("a forward image has the wrong rank");
      return report;
    }
  }
  for (const auto& e : iso.backward_images) {
    if (e.g.size() != iso.source.rank()) {
      fail("a backward image has the wrong rank");
      return report;
    }
  }

  check_one_direction(iso.source, iso.target, iso.forward_images, "forward", report);
  check_one_direction(iso.target, iso.source, iso.backward_images, "backward", report);

  const LimitIso backwards = inverse_iso(iso);
  for (std::size_t i = 0; i < iso.source.rank(); ++i) {
    IntVector e(iso.source.rank(), Int(0));
    e[i] = 1;
    const LimitElement generator{e, 0};
    const LimitElement round = apply_limit_hom(backwards, apply_limit_hom(iso, generator));
    if (!iso.source.equal(round, generator)) {
      fail("backward∘forward is not the identity on source generator #" + std::to_string(i));
    }
  }
  for (std::size_t j = 0; j < iso.target.rank(); ++j) {
    IntVector e(iso.target.rank(), Int(0));
    e[j] = 1;
    const LimitElement generator{e, 0};
    const LimitElement round = apply_limit_hom(iso, apply_limit_hom(backwards, generator));
    if (!iso.target.equal(round, generator)) {
      fail("forward∘backward is not the identity on target generator #" + std::to_string(j));
    }
  }

  SampleRng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const LimitElement x = sample_element(rng, iso.source);
    const LimitElement lhs = apply_limit_hom(iso, iso.source.induced(x));
    const LimitElement rhs = iso.target.induced(apply_limit_hom(iso, x));
    if (!iso.target.equal(lhs, rhs)) {
      fail("intertwining fails on sampled element #" + std::to_string(s));
    }
  }
  return report;
}

LimitIso shift_equiv_to_conjugacy(const Endomorphism& a, const Endomorphism& b,
                                  const ShiftEquivCert& cert) {
  if (!verify_cert(a, b, cert).valid()) {
    throw InvalidCertificate("certificate fails verification");
  }
  DirectLimitGroup source(a);
  DirectLimitGroup target(b);
  std::vector<LimitElement> forward;
  forward.reserve(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    forward.push_back(LimitElement{cert.phi.column(i), 0});
  }
  std::vector<LimitElement> backward;
  backward.reserve(b.rank());
  for (std::size_t j = 0; j < b.rank(); ++j) {
    backward.push_back(LimitElement{cert.psi.column(j), cert.lag});
  }
  LimitIso iso = make_limit_iso(std::move(source), std::move(target), std::move(forward),
                                std::move(backward));
  const IsoReport report = verify_limit_iso(iso);
  if (!report.ok) {
    throw std::logic_error("witness built from a verified certificate failed its own checks: " +
                           (report.diagnostics.empty() ? std::string("?") : report.diagnostics[0]));
  }
  return iso;
}

BridgedCert conjugacy_to_shift_equiv(const LimitIso& iso) {
  const IsoReport report = verify_limit_iso(iso);
  if (!report.ok) {
    throw InvalidIsoWitness("isomorphism witness fails verification", report.diagnostics);
  }

  const Endomorphism& a = iso.source.endo();
  const Endomorphism& b = iso.target.endo();

  std::vector<LimitElement> forward_min;
  std::size_t k0 = 0;
  for (const auto& image : iso.forward_images) {
    forward_min.push_back(iso.target.normalize(image));
    k0 = std::max(k0, forward_min.back().level);
  }
  std::vector<LimitElement> backward_min;
  std::size_t l0 = 0;
  for (const auto& image : iso.backward_images) {
    backward_min.push_back(iso.source.normalize(image));
    l0 = std::max(l0, backward_min.back().level);
  }

  auto columns_at_level = [](const DirectLimitGroup& lim, const std::vector<LimitElement>& elems,
                             std::size_t level) {
    std::vector<IntVector> cols;
    cols.reserve(elems.size());
    for (const auto& e : elems) cols.push_back(lim.raised_to_level(e, level).g);
    return IntMatrix::from_columns(lim.rank(), cols);
  };

  // The minimal common levels k0, l0 pin the maps only up to eventual-kernel
  // junk in the representatives, so the relations can fail there when an
  // endomorphism is not injective. Raising a side by j multiplies its map by
  // the j-th power of the endomorphism, and by the stabilization index the
  // junk is annihilated; search the smallest such raise that verifies.
  const std::size_t sa = iso.source.stabilization();
  const std::size_t sb = iso.target.stabilization();
  for (std::size_t total = 0; total <= sa + sb; ++total) {
    for (std::size_t jf = 0; jf <= std::min(total, sb); ++jf) {
      const std::size_t jb = total - jf;
      if (jb > sa) continue;
      const std::size_t k = k0 + jf;
      const std::size_t l = l0 + jb;
      ShiftEquivCert cert{columns_at_level(iso.target, forward_min, k),
                          columns_at_level(iso.source, backward_min, l), k + l};
      if (verify_cert(a, b, cert).valid()) {
        return BridgedCert{std::move(cert), k, l};
      }
    }
  }
  throw std::logic_error("no exact certificate within the stabilization bounds");
}

}  // namespace shiftlim
