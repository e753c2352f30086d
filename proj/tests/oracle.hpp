#pragma once

// Brute-force reference computations shared by the unit tests. Nothing here
// calls into the library beyond its value types.

#include <cstdint>
#include <vector>

#include "finloc/finsets.hpp"

namespace oracle {

using finloc::Nat;

inline std::size_t count_in(const std::vector<Nat>& xs, Nat lo, Nat hi) {
  std::size_t c = 0;
  for (Nat x : xs) c += (x >= lo && x < hi) ? 1 : 0;
  return c;
}

inline std::vector<Nat> elems(const finloc::WSet& x) {
  return {x.elements().begin(), x.elements().end()};
}

inline std::vector<Nat> range(Nat lo, Nat hi, Nat step = 1) {
  std::vector<Nat> v;
  for (Nat x = lo; x < hi; x += step) v.push_back(x);
  return v;
}

/// l_0 = 0, l_{j+1} = l_j + 2^(j^2)
inline std::vector<Nat> l_seq(std::size_t depth) {
  std::vector<Nat> l{0};
  for (std::size_t j = 0; j < depth; ++j) l.push_back(l.back() + (Nat{1} << (j * j)));
  return l;
}

}  // namespace oracle
