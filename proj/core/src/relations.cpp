#include "finloc/relations.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "finloc/error.hpp"

namespace finloc {

bool QuantifierReport::is_witness(std::size_t n) const {
  return std::binary_search(witnesses.begin(), witnesses.end(), n);
}

QuantifierReport report_from(const std::vector<bool>& holds) {
  QuantifierReport r;
  for (std::size_t n = 0; n < holds.size(); ++n) {
    if (holds[n]) r.witnesses.push_back(n);
  }
  if (holds.empty()) return r;
  r.evaluated_up_to = holds.size() - 1;
  std::size_t t = holds.size();
  while (t > 0 && holds[t - 1]) --t;
  if (t < holds.size()) r.tail_holds_from = t;
  return r;
}

namespace {

std::vector<bool> small_meets(const WSet& x, const BlockFamily& family, std::size_t k) {
  if (!family.empty() && family.max_element() >= x.horizon()) {
    fail(Errc::horizon_mismatch, "block family exceeds the horizon of X");
  }
  std::vector<bool> holds;
  holds.reserve(family.size());
  for (const auto& b : family.blocks()) holds.push_back(meet_count(b, x) <= k);
  return holds;
}

std::vector<bool> rich_gaps(const WSet& x, const WSet& y, std::size_t min_points) {
  auto counts = gap_counts(x, y);
  std::vector<bool> rich(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) rich[i] = counts[i] >= min_points;
  return rich;
}

// run[n] = number of consecutive rich gaps starting at n
std::vector<std::size_t> run_lengths(const std::vector<bool>& rich) {
  std::vector<std::size_t> run(rich.size() + 1, 0);
  for (std::size_t i = rich.size(); i-- > 0;) run[i] = rich[i] ? run[i + 1] + 1 : 0;
  return run;
}

}  // namespace

QuantifierReport eval_R_forall_k(const WSet& x, const BlockFamily& family, std::size_t k) {
  return report_from(small_meets(x, family, k));
}

QuantifierReport eval_R_exists_k(const WSet& x, const BlockFamily& family, std::size_t k) {
  return report_from(small_meets(x, family, k));
}

std::vector<std::size_t> gap_counts(const WSet& x, const WSet& y) {
  if (!y.empty() && x.horizon() < y.elements().back()) {
    fail(Errc::horizon_mismatch, "X is not known up to the last point of Y");
  }
  std::vector<std::size_t> counts;
  for (std::size_t n = 0; n + 1 < y.size(); ++n) {
    counts.push_back(x.count_in(y.elements()[n], y.elements()[n + 1]));
  }
  return counts;
}

QuantifierReport eval_S_k(const WSet& x, const WSet& y, std::size_t k,
                          std::size_t min_points) {
  if (k == 0) fail(Errc::invalid_argument, "S_k needs k > 0");
  if (y.size() < k + 1) {
    fail(Errc::too_few_points, "S_k needs at least k+1 points of Y");
  }
  auto run = run_lengths(rich_gaps(x, y, min_points));
  std::vector<bool> holds(y.size() - k);
  for (std::size_t n = 0; n < holds.size(); ++n) holds[n] = run[n] >= k;
  return report_from(holds);
}

std::optional<std::size_t> eval_S_plus(const WSet& x, const WSet& y, std::size_t m,
                                       std::size_t min_points) {
  if (m == 0) fail(Errc::invalid_argument, "S_+ runs need m > 0");
  if (y.size() < m + 1) {
    fail(Errc::too_few_points, "S_+ needs at least m+1 points of Y");
  }
  auto run = run_lengths(rich_gaps(x, y, min_points));
  for (std::size_t n = 0; n + m < y.size(); ++n) {
    if (run[n] >= m) return n;
  }
  return std::nullopt;
}

QuantifierReport eval_S_plus_eps(const WSet& x, const WSet& y) {
  auto run = run_lengths(rich_gaps(x, y, 2));
  std::vector<bool> holds;
  // n is evaluable when gap 2^{n+1}-1 exists, i.e. 2^{n+1} < |Y|
  for (std::size_t n = 0; n < 62 && (std::size_t{2} << n) < y.size(); ++n) {
    const std::size_t start = std::size_t{1} << n;
    holds.push_back(run[start] >= start);
  }
  return report_from(holds);
}

QuantifierReport eval_S_plus_phi(const WSet& x, const WSet& y, std::span<const Nat> phi) {
  for (std::size_t i = 1; i < phi.size(); ++i) {
    if (phi[i - 1] >= phi[i]) fail(Errc::not_increasing, "phi must be strictly increasing");
  }
  auto run = run_lengths(rich_gaps(x, y, 2));
  std::vector<bool> holds;
  for (std::size_t n = 0; n < phi.size() && n + phi[n] < y.size(); ++n) {
    holds.push_back(run[n] >= phi[n]);
  }
  return report_from(holds);
}

FiniteRelationInstance::FiniteRelationInstance(std::vector<std::string> left,
                                               std::vector<std::string> right,
                                               std::vector<std::vector<bool>> holds)
    : left_(std::move(left)), right_(std::move(right)), holds_(std::move(holds)) {
  if (left_.empty() || right_.empty()) {
    fail(Errc::invalid_argument, "relation universes must be nonempty");
  }
  if (holds_.size() != left_.size()) {
    fail(Errc::invalid_argument, "relation table must have one row per left point");
  }
  for (const auto& row : holds_) {
    if (row.size() != right_.size()) {
      fail(Errc::invalid_argument, "relation table must be total");
    }
  }
}

FiniteRelationInstance FiniteRelationInstance::from_table(std::vector<std::vector<bool>> holds) {
  std::vector<std::string> left, right;
  for (std::size_t i = 0; i < holds.size(); ++i) left.push_back(std::to_string(i));
  const std::size_t cols = holds.empty() ? 0 : holds.front().size();
  for (std::size_t j = 0; j < cols; ++j) right.push_back(std::to_string(j));
  return FiniteRelationInstance(std::move(left), std::move(right), std::move(holds));
}

bool FiniteRelationInstance::satisfies_dom_rng() const {
  for (const auto& row : holds_) {
    bool t = false, f = false;
    for (bool v : row) (v ? t : f) = true;
    if (!t || !f) return false;
  }
  for (std::size_t j = 0; j < right_.size(); ++j) {
    bool t = false, f = false;
    for (const auto& row : holds_) (row[j] ? t : f) = true;
    if (!t || !f) return false;
  }
  return true;
}

FiniteRelationInstance FiniteRelationInstance::complement_inverse() const {
  std::vector<std::vector<bool>> t(right_.size(), std::vector<bool>(left_.size()));
  for (std::size_t x = 0; x < left_.size(); ++x) {
    for (std::size_t y = 0; y < right_.size(); ++y) t[y][x] = !holds_[x][y];
  }
  return FiniteRelationInstance(right_, left_, std::move(t));
}

namespace {

// Least subset S of [0, width) (by size, then by colex order of masks) such
// that every target row has a bit in common with S. rows[i] is the mask of
// searchable points covering target i.
OptimalSet least_hitting_set(const std::vector<std::uint32_t>& rows, std::size_t width) {
  if (width > kExhaustiveUniverseBound) {
    fail(Errc::exhaustive_bound, "exhaustive search limited to 24 points");
  }
  for (std::size_t size = 1; size <= width; ++size) {
    // Gosper's hack over masks with `size` bits
    std::uint32_t mask = (std::uint32_t{1} << size) - 1;
    const std::uint32_t limit = std::uint32_t{1} << width;
    while (mask < limit) {
      bool ok = true;
      for (auto r : rows) {
        if ((r & mask) == 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        OptimalSet out{size, {}};
        for (std::size_t i = 0; i < width; ++i) {
          if (mask >> i & 1U) out.members.push_back(i);
        }
        return out;
      }
      const std::uint32_t c = mask & (~mask + 1);
      const std::uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  fail(Errc::no_dominating_set, "even the full universe does not cover every point");
}

}  // namespace

OptimalSet d_fin(const FiniteRelationInstance& inst) {
  std::vector<std::uint32_t> rows;
  for (std::size_t x = 0; x < inst.left_size(); ++x) {
    std::uint32_t m = 0;
    for (std::size_t y = 0; y < inst.right_size(); ++y) {
      if (inst.holds(x, y)) m |= std::uint32_t{1} << y;
    }
    rows.push_back(m);
  }
  return least_hitting_set(rows, inst.right_size());
}

OptimalSet b_fin(const FiniteRelationInstance& inst) {
  std::vector<std::uint32_t> cols;
  for (std::size_t y = 0; y < inst.right_size(); ++y) {
    std::uint32_t m = 0;
    for (std::size_t x = 0; x < inst.left_size(); ++x) {
      if (!inst.holds(x, y)) m |= std::uint32_t{1} << x;
    }
    cols.push_back(m);
  }
  return least_hitting_set(cols, inst.left_size());
}

}  // namespace finloc
