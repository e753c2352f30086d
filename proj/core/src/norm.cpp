#include "finloc/norm.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "finloc/error.hpp"

namespace finloc {

Nat floor_log2(std::size_t n) noexcept {
  return n <= 1 ? 0 : static_cast<Nat>(std::bit_width(n) - 1);
}

Norm Norm::table(std::vector<Nat> base, std::vector<Nat> values, Nat shift) {
  if (!std::is_sorted(base.begin(), base.end()) ||
      std::adjacent_find(base.begin(), base.end()) != base.end()) {
    fail(Errc::invalid_argument, "norm base must be strictly increasing");
  }
  if (base.size() > kMaxTableBase) {
    fail(Errc::invalid_argument, "table norms are limited to " +
                                     std::to_string(kMaxTableBase) + " base points");
  }
  if (values.size() != (std::size_t{1} << base.size())) {
    fail(Errc::table_not_total, "table must give a value for each of the " +
                                    std::to_string(std::size_t{1} << base.size()) + " subsets");
  }
  Norm n;
  n.kind_ = TableNorm{std::move(base), std::move(values)};
  n.shift_ = shift;
  return n;
}

Norm Norm::log(Nat shift) {
  Norm n;
  n.shift_ = shift;
  return n;
}

Norm Norm::shifted(Nat extra) const {
  Norm n = *this;
  n.shift_ += extra;
  return n;
}

Norm Norm::unshifted(Nat amount) const {
  if (amount > shift_) fail(Errc::invalid_argument, "shift would become negative");
  Norm n = *this;
  n.shift_ -= amount;
  return n;
}

Nat Norm::value_by_size(std::size_t size) const {
  if (!is_log()) fail(Errc::invalid_argument, "table norms are not evaluated by size");
  const Nat raw = floor_log2(size);
  return raw > shift_ ? raw - shift_ : 0;
}

Nat Norm::value(std::span<const Nat> subset) const {
  if (is_log()) return value_by_size(subset.size());
  const auto& t = std::get<TableNorm>(kind_);
  std::size_t mask = 0;
  for (Nat x : subset) {
    auto it = std::lower_bound(t.base.begin(), t.base.end(), x);
    if (it == t.base.end() || *it != x) {
      fail(Errc::table_not_total, "label " + std::to_string(x) + " is outside the norm's base");
    }
    mask |= std::size_t{1} << (it - t.base.begin());
  }
  const Nat raw = t.values[mask];
  return raw > shift_ ? raw - shift_ : 0;
}

namespace {

std::vector<Nat> subset_of(std::span<const Nat> labels, std::uint32_t mask) {
  std::vector<Nat> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (mask >> i & 1U) out.push_back(labels[i]);
  }
  return out;
}

std::vector<Nat> values_on(const Norm& norm, std::span<const Nat> labels) {
  std::vector<Nat> vals(std::size_t{1} << labels.size());
  for (std::uint32_t m = 0; m < vals.size(); ++m) vals[m] = norm.value(subset_of(labels, m));
  return vals;
}

std::optional<NormViolation> validate_log(const Norm& norm, std::size_t size) {
  using A = NormViolation::Axiom;
  if (norm.value_by_size(size) == 0) return NormViolation{0, 0, A::positive};
  if (norm.value_by_size(1) > 1) return NormViolation{0, 1, A::singleton};
  // Values only depend on cardinality; masks in the witness are the
  // lowest-index sets of the offending sizes.
  auto low = [](std::size_t c) { return c >= 32 ? ~0U : (1U << c) - 1; };
  for (std::size_t c = 1; c <= size; ++c) {
    const Nat vc = norm.value_by_size(c);
    if (norm.value_by_size(c - 1) > vc) return NormViolation{low(c - 1), low(c), A::monotone};
    if (vc == 0) continue;
    const std::size_t half = c / 2;  // the larger part is the best case
    if (norm.value_by_size(c - half) + 1 < vc) return NormViolation{low(half), low(c), A::bisection};
  }
  return std::nullopt;
}

}  // namespace

std::optional<NormViolation> validate_norm(const Norm& norm, std::span<const Nat> labels) {
  using A = NormViolation::Axiom;
  if (norm.is_log()) return validate_log(norm, labels.size());
  if (labels.size() > kMaxTableBase) {
    fail(Errc::invalid_argument, "too many labels for exhaustive validation");
  }
  const auto vals = values_on(norm, labels);
  const std::uint32_t full = static_cast<std::uint32_t>(vals.size() - 1);
  if (vals[full] == 0) return NormViolation{0, full, A::positive};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (vals[1U << i] > 1) return NormViolation{0, 1U << i, A::singleton};
  }
  for (std::uint32_t c = 1; c <= full; ++c) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if ((c >> i & 1U) && vals[c & ~(1U << i)] > vals[c]) {
        return NormViolation{c & ~(1U << i), c, A::monotone};
      }
    }
  }
  for (std::uint32_t c = 1; c <= full; ++c) {
    const Nat vc = vals[c];
    if (vc == 0) continue;
    // all submasks b of c, including 0 and c itself
    for (std::uint32_t b = c;; b = (b - 1) & c) {
      if (vals[b] + 1 < vc && vals[c & ~b] + 1 < vc) return NormViolation{b, c, A::bisection};
      if (b == 0) break;
    }
  }
  return std::nullopt;
}

bool norms_agree(const Norm& a, const Norm& b, std::span<const Nat> labels) {
  if (a.is_log() && b.is_log()) {
    for (std::size_t c = 0; c <= labels.size(); ++c) {
      if (a.value_by_size(c) != b.value_by_size(c)) return false;
    }
    return true;
  }
  if (labels.size() > kMaxTableBase) return false;  // a table cannot cover that many labels
  for (std::uint32_t m = 0; m < (1U << labels.size()); ++m) {
    const auto s = subset_of(labels, m);
    if (a.value(s) != b.value(s)) return false;
  }
  return true;
}

}  // namespace finloc
