#include "finloc/largeness.hpp"

#include <algorithm>
#include <string>

#include "finloc/error.hpp"

namespace finloc {

LargenessVerdict is_lk_large(const WSet& x, const FamilyUniverse& universe, std::size_t l,
                             std::size_t k, std::size_t tail_start) {
  if (k >= l) fail(Errc::invalid_argument, "(l,k)-largeness needs k < l");
  for (const auto& fam : universe.families) {
    for (const auto& b : fam.blocks()) {
      if (b.size() != l) {
        fail(Errc::wrong_block_size, "family block of size " + std::to_string(b.size()) +
                                         ", expected " + std::to_string(l));
      }
      if (b.back() >= x.horizon()) {
        fail(Errc::horizon_mismatch, "family block exceeds the horizon of X");
      }
    }
  }
  for (std::size_t f = 0; f < universe.families.size(); ++f) {
    const auto& fam = universe.families[f];
    for (std::size_t n = tail_start; n < fam.size(); ++n) {
      if (meet_count(fam.block(n), x) <= k) return {false, std::make_pair(f, n)};
    }
  }
  return {true, std::nullopt};
}

BlockFamily subset_family(const BlockFamily& family, std::span<const std::size_t> positions) {
  std::vector<std::size_t> pos(positions.begin(), positions.end());
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  if (pos.empty()) fail(Errc::invalid_argument, "position set must be nonempty");
  std::vector<BlockFamily::Block> out;
  for (const auto& b : family.blocks()) {
    if (pos.back() >= b.size()) {
      fail(Errc::position_out_of_range, "position " + std::to_string(pos.back()) +
                                            " outside a block of size " +
                                            std::to_string(b.size()));
    }
    BlockFamily::Block sel;
    for (auto p : pos) sel.push_back(b[p]);
    out.push_back(std::move(sel));
  }
  return BlockFamily(family.horizon(), std::move(out), false);
}

BlockFamily concat_family(const BlockFamily& family, std::size_t l) {
  if (l == 0) fail(Errc::invalid_argument, "group length must be positive");
  if (family.size() < l) fail(Errc::too_few_elements, "family has fewer than l blocks");
  std::vector<BlockFamily::Block> out;
  for (std::size_t n = 0; (n + 1) * l <= family.size(); ++n) {
    BlockFamily::Block u;
    for (std::size_t j = n * l; j < (n + 1) * l; ++j) {
      u.insert(u.end(), family.block(j).begin(), family.block(j).end());
    }
    out.push_back(std::move(u));
  }
  // dropping a trailing group keeps the union an initial run
  return BlockFamily(family.horizon(), std::move(out), family.covering());
}

bool transfer_counting_check(std::span<const Nat> block, const WSet& x, std::size_t l,
                             std::size_t k) {
  if (l == 0 || block.empty() || block.size() % l != 0) {
    fail(Errc::size_not_multiple, "|K| must be a positive multiple of l");
  }
  if (k + 1 >= l) fail(Errc::invalid_argument, "transfer check needs k+1 < l");
  std::vector<Nat> sorted(block.begin(), block.end());
  std::sort(sorted.begin(), sorted.end());

  std::size_t missing = 0;
  for (Nat v : sorted) missing += x.contains(v) ? 0 : 1;
  const bool rhs = missing < l - k;

  // enumerate all l-subsets of positions in lexicographic order
  const std::size_t n = sorted.size();
  std::vector<std::size_t> a(l);
  for (std::size_t i = 0; i < l; ++i) a[i] = i;
  bool lhs = true;
  while (true) {
    std::size_t meets = 0;
    for (auto p : a) meets += x.contains(sorted[p]) ? 1 : 0;
    if (meets <= k) {
      lhs = false;
      break;
    }
    std::size_t i = l;
    while (i > 0 && a[i - 1] == n - l + (i - 1)) --i;
    if (i == 0) break;
    ++a[i - 1];
    for (std::size_t j = i; j < l; ++j) a[j] = a[j - 1] + 1;
  }
  return lhs == rhs;
}

std::vector<std::vector<Nat>> split_into_2_3(std::span<const Nat> block, std::size_t min_pieces) {
  std::vector<Nat> k(block.begin(), block.end());
  std::sort(k.begin(), k.end());
  if (k.size() < 2 || k.size() / 2 < min_pieces) {
    fail(Errc::infeasible, "a block of size " + std::to_string(k.size()) +
                               " cannot be split into " + std::to_string(min_pieces) +
                               " pieces of size 2 or 3");
  }
  std::vector<std::vector<Nat>> pieces;
  for (std::size_t i = 0; i + 1 < k.size(); i += 2) pieces.push_back({k[i], k[i + 1]});
  if (k.size() % 2 == 1) pieces.back().push_back(k.back());
  return pieces;
}

WSet derived_Y(const BlockFamily& family, const WSet& x) {
  std::vector<Nat> ys;
  for (std::size_t n = 0; n < family.size(); ++n) {
    if (meet_count(family.block(n), x) > 0) ys.push_back(n);
  }
  return WSet(std::max<Nat>(family.size(), 1), std::move(ys));
}

FLargeVerdict f_large_check(const WSet& x, const BlockFamily& family, std::span<const Nat> f,
                            std::size_t tail_start) {
  if (f.size() < family.size()) {
    fail(Errc::invalid_argument, "f must be defined on every block index");
  }
  FLargeVerdict v;
  for (std::size_t n = 0; n < family.size(); ++n) {
    if (family.block(n).size() < f[n] + 2) {
      v.outcome = FLargeOutcome::small_block;
      v.small_block = n;
      return v;
    }
  }
  for (std::size_t n = tail_start; n < family.size(); ++n) {
    if (meet_count(family.block(n), x) > f[n]) v.witnesses.push_back(n);
  }
  v.outcome = v.witnesses.empty() ? FLargeOutcome::neither : FLargeOutcome::meets_often;
  return v;
}

}  // namespace finloc
