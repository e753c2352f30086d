#include "finloc/finsets.hpp"

#include <algorithm>
#include <string>

#include "finloc/error.hpp"

namespace finloc {

WSet::WSet(Nat horizon, std::vector<Nat> elements)
    : window_{horizon}, elements_(std::move(elements)) {
  if (horizon == 0) fail(Errc::invalid_argument, "window horizon must be >= 1");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] >= horizon) {
      fail(Errc::horizon_mismatch, "element " + std::to_string(elements_[i]) +
                                       " not below horizon " + std::to_string(horizon));
    }
    if (i > 0 && elements_[i - 1] >= elements_[i]) {
      fail(Errc::invalid_argument, "WSet elements must be strictly increasing");
    }
  }
}

WSet WSet::from_unsorted(Nat horizon, std::vector<Nat> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return WSet(horizon, std::move(elements));
}

WSet WSet::interval(Nat lo, Nat hi, Nat horizon) {
  std::vector<Nat> xs;
  for (Nat v = lo; v < hi; ++v) xs.push_back(v);
  return WSet(horizon, std::move(xs));
}

bool WSet::contains(Nat x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::size_t WSet::count_in(Nat lo, Nat hi) const {
  if (hi <= lo) return 0;
  auto first = std::lower_bound(elements_.begin(), elements_.end(), lo);
  auto last = std::lower_bound(first, elements_.end(), hi);
  return static_cast<std::size_t>(last - first);
}

Nat mu(const WSet& x, std::size_t n) {
  if (n >= x.size()) {
    fail(Errc::index_beyond_window,
         "mu: index " + std::to_string(n) + " beyond window holding " +
             std::to_string(x.size()) + " elements");
  }
  return x.elements()[n];
}

BlockFamily::BlockFamily(Nat horizon, std::vector<Block> blocks, bool covering)
    : window_{horizon}, blocks_(std::move(blocks)), covering_(covering) {
  if (horizon == 0) fail(Errc::invalid_argument, "window horizon must be >= 1");
  for (auto& b : blocks_) {
    if (b.empty()) fail(Errc::invalid_argument, "blocks must be nonempty");
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
      fail(Errc::invalid_argument, "block has repeated elements");
    }
    if (b.back() >= horizon) {
      fail(Errc::horizon_mismatch, "block element " + std::to_string(b.back()) +
                                       " not below horizon " + std::to_string(horizon));
    }
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });

  std::vector<Nat> all;
  for (const auto& b : blocks_) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    fail(Errc::invalid_argument, "blocks are not pairwise disjoint");
  }
  if (covering_ && !all.empty()) {
    if (all.back() - all.front() + 1 != all.size()) {
      fail(Errc::invalid_argument, "covering family has a gap in its union");
    }
  }
}

Nat BlockFamily::max_element() const noexcept {
  Nat m = 0;
  for (const auto& b : blocks_) m = std::max(m, b.back());
  return m;
}

IntervalPartition::IntervalPartition(std::vector<Nat> cutpoints)
    : cutpoints_(std::move(cutpoints)) {
  if (cutpoints_.empty() || cutpoints_.front() != 0) {
    fail(Errc::invalid_argument, "cutpoints must start at 0");
  }
  for (std::size_t i = 1; i < cutpoints_.size(); ++i) {
    if (cutpoints_[i - 1] >= cutpoints_[i]) {
      fail(Errc::not_increasing, "cutpoints must be strictly increasing");
    }
  }
}

BlockFamily IntervalPartition::to_family() const {
  std::vector<BlockFamily::Block> blocks;
  for (std::size_t n = 0; n + 1 < cutpoints_.size(); ++n) {
    BlockFamily::Block b;
    for (Nat v = cutpoints_[n]; v < cutpoints_[n + 1]; ++v) b.push_back(v);
    blocks.push_back(std::move(b));
  }
  return BlockFamily(std::max<Nat>(cutpoints_.back(), 1), std::move(blocks), true);
}

bool in_P_k(const BlockFamily& family, std::size_t k) {
  return std::all_of(family.blocks().begin(), family.blocks().end(),
                     [k](const auto& b) { return b.size() > k; });
}

BlockFamily intervals_of(const WSet& x) {
  if (x.size() < 2) {
    fail(Errc::too_few_elements, "intervals_of needs at least two elements");
  }
  std::vector<BlockFamily::Block> blocks;
  for (std::size_t n = 0; n + 1 < x.size(); ++n) {
    BlockFamily::Block b;
    for (Nat v = mu(x, n); v < mu(x, n + 1); ++v) b.push_back(v);
    blocks.push_back(std::move(b));
  }
  return BlockFamily(x.horizon(), std::move(blocks), true);
}

std::size_t meet_count(std::span<const Nat> block, const WSet& x) {
  std::size_t c = 0;
  for (Nat v : block) c += x.contains(v) ? 1 : 0;
  return c;
}

}  // namespace finloc
