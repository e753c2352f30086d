#include "finloc/pair_poset.hpp"

#include <algorithm>

#include "finloc/error.hpp"

namespace finloc {

void check_pair_condition(const PairCondition& p) {
  if (!std::is_sorted(p.u.begin(), p.u.end()) ||
      std::adjacent_find(p.u.begin(), p.u.end()) != p.u.end()) {
    fail(Errc::invalid_argument, "u must be strictly increasing");
  }
  for (const auto& f : p.kk) {
    std::vector<Nat> seen;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i][0] >= f[i][1]) fail(Errc::invalid_argument, "pairs need two increasing points");
      if (i > 0 && !(f[i - 1] < f[i])) fail(Errc::invalid_argument, "pairs must be listed in order");
      seen.push_back(f[i][0]);
      seen.push_back(f[i][1]);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      fail(Errc::invalid_argument, "pairs of a family must be disjoint");
    }
  }
}

bool pair_leq(const PairCondition& p0, const PairCondition& p1) {
  auto in = [](const std::vector<Nat>& s, Nat x) { return std::binary_search(s.begin(), s.end(), x); };
  std::vector<Nat> low;
  if (!p0.u.empty()) {
    for (Nat x : p1.u) {
      if (x <= p0.u.back()) low.push_back(x);
    }
  }
  if (low != p0.u) return false;
  if (!std::includes(p1.kk.begin(), p1.kk.end(), p0.kk.begin(), p0.kk.end())) return false;
  for (const auto& f : p0.kk) {
    for (const auto& k : f) {
      if (in(p1.u, k[0]) && in(p1.u, k[1]) && !(in(p0.u, k[0]) && in(p0.u, k[1]))) return false;
    }
  }
  return true;
}

std::optional<PairCondition> pair_join(const PairCondition& p0, const PairCondition& p1) {
  if (p0.u != p1.u) return std::nullopt;
  PairCondition j{p0.u, p0.kk};
  j.kk.insert(p1.kk.begin(), p1.kk.end());
  return j;
}

}  // namespace finloc
