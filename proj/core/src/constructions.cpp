#include "finloc/constructions.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "finloc/error.hpp"

namespace finloc {

Nat code_of(std::span<const std::uint8_t> bits) {
  if (bits.size() >= 63) fail(Errc::overflow, "sequence too long to code");
  Nat value = 0;
  for (auto b : bits) value = value << 1 | (b ? 1U : 0U);
  return (Nat{1} << bits.size()) - 1 + value;
}

std::size_t coded_length(Nat code) {
  return static_cast<std::size_t>(std::bit_width(code + 1) - 1);
}

std::vector<std::uint8_t> decode(Nat code) {
  const std::size_t len = coded_length(code);
  const Nat value = code + 1 - (Nat{1} << len);
  std::vector<std::uint8_t> bits(len);
  for (std::size_t i = 0; i < len; ++i) bits[i] = value >> (len - 1 - i) & 1U;
  return bits;
}

bool BranchPrefix::is_initial_segment(Nat code) const {
  auto s = decode(code);
  if (s.size() > bits.size()) {
    fail(Errc::undecidable_prefix, "sequence of length " + std::to_string(s.size()) +
                                       " exceeds the known prefix of length " +
                                       std::to_string(bits.size()));
  }
  return std::equal(s.begin(), s.end(), bits.begin());
}

WSet branch_complement(const BranchPrefix& x, Nat horizon) {
  std::vector<Nat> out;
  for (Nat c = 0; c < horizon; ++c) {
    if (!x.is_initial_segment(c)) out.push_back(c);
  }
  return WSet(horizon, std::move(out));
}

LematResult lemat_witness(const BranchPrefix& x, const BlockFamily& family, std::size_t k) {
  for (const auto& b : family.blocks()) {
    if (b.size() <= k) fail(Errc::invalid_argument, "every block needs more than k elements");
  }
  for (std::size_t n = 0; n < family.size(); ++n) {
    std::size_t off_chain = 0;
    for (Nat c : family.block(n)) off_chain += x.is_initial_segment(c) ? 0 : 1;
    if (off_chain >= k + 1) return {n, std::nullopt};
  }

  LematTrace trace;
  for (const auto& b : family.blocks()) {
    std::size_t lo = coded_length(b.front()), hi = lo;
    for (Nat c : b) {
      lo = std::min(lo, coded_length(c));
      hi = std::max(hi, coded_length(c));
    }
    trace.u.push_back(hi);
    trace.d.push_back(lo);
  }
  if (!family.empty()) {
    trace.selected.push_back(0);
    for (std::size_t n = 1; n < family.size(); ++n) {
      if (trace.d[n] > trace.u[trace.selected.back()]) trace.selected.push_back(n);
    }
  }
  for (auto n : trace.selected) {
    std::vector<Nat> restr;
    for (Nat c : family.block(n)) {
      auto s = decode(c);
      s.resize(trace.d[n]);
      restr.push_back(code_of(s));
    }
    std::sort(restr.begin(), restr.end());
    restr.erase(std::unique(restr.begin(), restr.end()), restr.end());
    trace.restrictions.push_back(std::move(restr));
  }
  return {std::nullopt, std::move(trace)};
}

std::vector<Nat> partition_to_escaping_g(const BlockFamily& family) {
  if (!family.covering()) {
    fail(Errc::invalid_argument, "escaping function needs a covering family");
  }
  std::vector<Nat> g(family.empty() ? 0 : family.max_element() + 1, 0);
  for (const auto& b : family.blocks()) g[b.front()] = 1 + b.back();
  return g;
}

std::vector<Nat> sparse_range_function(std::span<const Nat> f, std::size_t length) {
  std::vector<Nat> out;
  Nat cur = 0;
  while (out.size() < length) {
    out.push_back(cur);
    if (cur >= f.size()) break;
    cur = f[cur] + 2;
  }
  return out;
}

IntervalPartition g_to_interval_partition(std::span<const Nat> g, std::size_t k,
                                          std::size_t length) {
  std::vector<Nat> cuts{0};
  for (std::size_t n = 0; n < length; ++n) {
    const Nat kn = cuts.back();
    if (kn >= g.size()) {
      fail(Errc::g_undefined, "g undefined at " + std::to_string(kn));
    }
    cuts.push_back(k + 1 + kn + g[kn]);
  }
  return IntervalPartition(std::move(cuts));
}

std::vector<Nat> crowding_function(const WSet& x, std::size_t k, std::size_t domain) {
  std::vector<Nat> f;
  const auto xs = x.elements();
  for (Nat n = 0; n < domain; ++n) {
    auto first = std::lower_bound(xs.begin(), xs.end(), n);
    const auto available = static_cast<std::size_t>(xs.end() - first);
    if (available < 2 * k + 1) {
      fail(Errc::window_exhausted, "fewer than 2k+1 points of X past " + std::to_string(n));
    }
    f.push_back(*(first + static_cast<std::ptrdiff_t>(2 * k)) + 1);
  }
  return f;
}

MeabouResult meabou_partition(const WSet& x, const BlockFamily& family,
                              const std::vector<std::vector<Nat>>& g) {
  if (g.size() != family.size()) {
    fail(Errc::invalid_argument, "g must give one set per block");
  }
  std::vector<std::vector<Nat>> gblocks;
  std::vector<std::pair<Nat, std::size_t>> leftovers;  // (point, source block)
  for (std::size_t n = 0; n < family.size(); ++n) {
    std::vector<Nat> gn = g[n];
    std::sort(gn.begin(), gn.end());
    gn.erase(std::unique(gn.begin(), gn.end()), gn.end());
    if (gn.size() < 2) fail(Errc::g_too_small, "g(" + std::to_string(n) + ") has < 2 points");
    const auto& kn = family.block(n);
    if (!std::includes(kn.begin(), kn.end(), gn.begin(), gn.end())) {
      fail(Errc::g_not_subset, "g(" + std::to_string(n) + ") is not inside K_n");
    }
    for (Nat v : kn) {
      if (!std::binary_search(gn.begin(), gn.end(), v)) leftovers.emplace_back(v, n);
    }
    gblocks.push_back(std::move(gn));
  }
  std::sort(leftovers.begin(), leftovers.end());

  std::vector<std::vector<Nat>> blocks = gblocks;
  std::vector<bool> is_g(blocks.size(), true);
  if (leftovers.size() == 1) {
    // keep X-disjoint g-blocks intact where possible
    auto [v, src] = leftovers[0];
    std::size_t host = src;
    if (x.contains(v) && meet_count(blocks[src], x) == 0) {
      for (std::size_t n = 0; n < blocks.size(); ++n) {
        if (meet_count(blocks[n], x) > 0) {
          host = n;
          break;
        }
      }
    }
    auto& hb = blocks[host];
    hb.insert(std::upper_bound(hb.begin(), hb.end(), v), v);
  } else {
    for (std::size_t i = 0; i + 1 < leftovers.size(); i += 2) {
      blocks.push_back({leftovers[i].first, leftovers[i + 1].first});
      is_g.push_back(false);
    }
    if (leftovers.size() % 2 == 1) blocks.back().push_back(leftovers.back().first);
  }

  // disjointness is decided on the g-blocks as they appear in the result
  std::vector<std::vector<Nat>> disjoint;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (is_g[i] && meet_count(blocks[i], x) == 0) disjoint.push_back(blocks[i]);
  }
  BlockFamily out(family.horizon(), std::move(blocks), family.covering());
  std::vector<std::size_t> idx;
  for (std::size_t n = 0; n < out.size(); ++n) {
    if (std::find(disjoint.begin(), disjoint.end(), out.block(n)) != disjoint.end()) {
      idx.push_back(n);
    }
  }
  return {std::move(out), std::move(idx)};
}

namespace {

void check_phi(std::span<const Nat> phi) {
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] == 0) fail(Errc::invalid_argument, "phi must be positive");
    if (i > 0 && phi[i - 1] > phi[i]) fail(Errc::not_increasing, "phi must be non-decreasing");
  }
}

}  // namespace

SPlusPhiTrace s_plus_phi_targets(const WSet& x, std::span<const Nat> phi, const WSet& y0) {
  check_phi(phi);
  if (!y0.empty() && y0.elements().back() > x.horizon()) {
    fail(Errc::horizon_mismatch, "Y_0 extends beyond the horizon of X");
  }
  const auto xs = x.elements();
  std::vector<Nat> x0;
  if (!xs.empty()) {
    std::size_t idx = 0;
    x0.push_back(xs[0]);
    while (true) {
      const Nat cur = xs[idx];
      if (cur + 4 >= phi.size()) break;
      const std::size_t need = 3 * phi[cur + 4] + 6;  // |[cur, next) ∩ X| > need
      if (idx + need + 1 >= xs.size()) break;
      idx += need + 1;
      x0.push_back(xs[idx]);
    }
  }
  if (x0.size() < 2) {
    fail(Errc::density_insufficient, "X is too sparse for the first X_0 step (n = 0)");
  }

  SPlusPhiTrace t;
  t.x0 = WSet(x.horizon(), x0);
  std::vector<Nat> x1;
  for (std::size_t n = 0; n + 1 < y0.size(); ++n) {
    const Nat lo = y0.elements()[n], hi = y0.elements()[n + 1];
    if (t.x0.count_in(lo, hi) >= 2) {
      x1.push_back(lo);
      auto first = std::lower_bound(xs.begin(), xs.end(), lo);
      auto last = std::lower_bound(first, xs.end(), hi);
      t.targets[lo] = std::vector<Nat>(first, last);
    }
  }
  t.x1 = WSet(x.horizon(), std::move(x1));
  t.y1 = WSet(x.horizon(), {});
  t.y = WSet(x.horizon(), {});
  return t;
}

SPlusPhiTrace s_plus_phi_pipeline(const WSet& x, std::span<const Nat> phi, const WSet& y0,
                                  const FiniteSetMap& g) {
  auto t = s_plus_phi_targets(x, phi, y0);
  std::vector<Nat> y1;
  for (std::size_t n = 0; n + 1 < y0.size(); ++n) {
    const Nat lo = y0.elements()[n], hi = y0.elements()[n + 1];
    auto it = g.find(lo);
    if (it == g.end()) continue;
    for (Nat v : it->second) {
      if (v >= lo && v < hi) y1.push_back(v);
    }
  }
  t.y1 = WSet::from_unsorted(x.horizon(), std::move(y1));
  std::vector<Nat> y;
  for (std::size_t i = 0; i < t.y1.size(); i += 3) y.push_back(t.y1.elements()[i]);
  t.y = WSet(x.horizon(), std::move(y));

  for (const auto& [p, target] : t.targets) {
    auto it = g.find(p);
    if (it == g.end()) continue;
    std::vector<Nat> gv = it->second;
    std::sort(gv.begin(), gv.end());
    gv.erase(std::unique(gv.begin(), gv.end()), gv.end());
    if (gv == target) t.matched.push_back(p);
  }
  return t;
}

}  // namespace finloc
