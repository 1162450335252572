#include "shiftlim/direct_limit.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace shiftlim {

namespace {

IntMatrix descent_system(const Endomorphism& e, const LatticeBasis& kernel) {
  if (kernel.empty()) return e.matrix();
  return hcat(e.matrix(), IntMatrix::from_columns(e.rank(), kernel.vectors));
}

}  // namespace

DirectLimitGroup::DirectLimitGroup(Endomorphism endo)
    : endo_(std::move(endo)),
      stab_(stabilization_index(endo_)),
      stab_power_(endo_.power(stab_)),
      kernel_(eventual_kernel_basis(endo_)),
      descent_snf_(smith_normal_form(descent_system(endo_, kernel_))) {}

void DirectLimitGroup::check_member(const LimitElement& x) const {
  if (x.g.size() != rank()) {
    throw DimensionError("limit element has rank " + std::to_string(x.g.size()) +
                         " but the group has rank " + std::to_string(rank()));
  }
}

LimitElement DirectLimitGroup::identity() const { return LimitElement{IntVector(rank(), Int(0)), 0}; }

LimitElement DirectLimitGroup::embed(IntVector g) const {
  LimitElement x{std::move(g), 0};
  check_member(x);
  return x;
}

bool DirectLimitGroup::equal(const LimitElement& x, const LimitElement& y) const {
  check_member(x);
  check_member(y);
  const std::size_t n = std::max(x.level, y.level);
  const IntVector dx = endo_.power(n - x.level).apply(x.g);
  const IntVector dy = endo_.power(n - y.level).apply(y.g);
  return is_zero_vector(stab_power_.apply(subtract(dx, dy)));
}

bool DirectLimitGroup::is_identity(const LimitElement& x) const {
  check_member(x);
  return is_zero_vector(stab_power_.apply(x.g));
}

LimitElement DirectLimitGroup::add(const LimitElement& x, const LimitElement& y) const {
  check_member(x);
  check_member(y);
  const IntVector lhs = endo_.power(y.level).apply(x.g);
  const IntVector rhs = endo_.power(x.level).apply(y.g);
  return LimitElement{shiftlim::add(lhs, rhs), x.level + y.level};
}

LimitElement DirectLimitGroup::negate(const LimitElement& x) const {
  check_member(x);
  return LimitElement{negated(x.g), x.level};
}

LimitElement DirectLimitGroup::coshift(const LimitElement& x) const {
  check_member(x);
  return LimitElement{x.g, x.level + 1};
}

LimitElement DirectLimitGroup::induced(const LimitElement& x) const {
  check_member(x);
  return LimitElement{endo_.matrix().apply(x.g), x.level};
}

LimitElement DirectLimitGroup::normalize(const LimitElement& x) const {
  check_member(x);
  LimitElement cur = x;
  while (cur.level > 0) {
    // (g', level-1) ~ (g, level) iff A·g' = g modulo the eventual kernel;
    // solvable iff g lies in A·Z^r + kernel. Any particular solution will
    // do: two solutions differ by an eventual-kernel vector, so the class
    // of the descended representative is unique.
    const auto sol = solve_integer(descent_snf_, cur.g);
    if (!sol) break;
    cur = LimitElement{IntVector(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(rank())),
                       cur.level - 1};
  }
  return cur;
}

LimitElement DirectLimitGroup::raised_to_level(const LimitElement& x, std::size_t target) const {
  check_member(x);
  if (target < x.level) {
    throw std::invalid_argument("cannot raise to a level below the current one");
  }
  return LimitElement{endo_.power(target - x.level).apply(x.g), target};
}

LimitElement DirectLimitGroup::combine(const IntVector& coeffs,
                                       const std::vector<LimitElement>& elems) const {
  if (coeffs.size() != elems.size()) {
    throw DimensionError("coefficient count does not match element count");
  }
  std::size_t top = 0;
  for (const auto& e : elems) {
    check_member(e);
    top = std::max(top, e.level);
  }
  IntVector acc(rank(), Int(0));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const IntVector lifted = endo_.power(top - elems[i].level).apply(elems[i].g);
    acc = shiftlim::add(acc, scaled(coeffs[i], lifted));
  }
  return LimitElement{std::move(acc), top};
}

LimitElement DirectLimitGroup::scalar_multiple(const Int& c, const LimitElement& x) const {
  check_member(x);
  return LimitElement{scaled(c, x.g), x.level};
}

}  // namespace shiftlim
