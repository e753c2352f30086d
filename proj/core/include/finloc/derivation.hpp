#pragma once

// Sigma*-derivations with replayable certificates, condition fragments and
// the fragment order.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finloc/creature.hpp"

namespace finloc {

/// A derivation tree. `part` leaves name a part by index; `refine` and
/// `build` record the creature they produce so replay can check the step.
struct Derivation {
  enum class Op { part, upper_half, refine, build };
  Op op = Op::part;
  std::size_t part = 0;
  std::vector<Derivation> inputs;
  std::optional<Creature> result;

  static Derivation of_part(std::size_t i);
  static Derivation upper_half_of(Derivation d);
  static Derivation refine_of(Derivation d, Creature result);
  static Derivation build_of(std::vector<Derivation> ds, Creature result);
};

/// Number of operations (non-part nodes).
std::size_t steps(const Derivation& d);

/// Recomputes the derived creature, checking every refine and build step.
/// Throws invalid-argument on a bad certificate.
Creature replay(const Derivation& d, std::span<const Creature> parts);
bool verify_derivation(const Derivation& d, std::span<const Creature> parts, const Creature& t);

/// Adds `offset` to every part index.
Derivation reindex(const Derivation& d, std::size_t offset);
/// Replaces part i of `outer` by inner[i].
Derivation compose(const Derivation& outer, std::span<const Derivation> inner);

struct SigmaStarResult {
  bool found = false;  // false means not found within the cap, never "no"
  std::optional<Derivation> certificate;
};

SigmaStarResult sigma_star_member(const Creature& t, std::span<const Creature> parts,
                                  std::size_t depth_cap);

struct ConditionFragment {
  std::vector<Nat> w;  // sorted
  std::vector<Creature> creatures;
};

/// max(w) < L_0 <= R_0 < L_1 <= ... and a common k; throws interval-overlap
/// or invalid-argument.
void check_fragment(const ConditionFragment& f);

struct FragmentHints {
  std::vector<std::size_t> cuts;  // n_0 < n_1 < ... < n_r, one more than q's creatures
  std::vector<Derivation> derivations;
};

enum class Verdict { holds, fails, cap_limited };

struct FragmentVerdict {
  Verdict verdict = Verdict::cap_limited;
  std::optional<FragmentHints> certificate;
  std::string reason;
};

/// Whether q extends p. Hints are verified first; the search falls back to
/// enumerating cut sequences.
FragmentVerdict fragment_leq(const ConditionFragment& p, const ConditionFragment& q,
                             const FragmentHints* hints = nullptr, std::size_t depth_cap = 3);

/// Checks a certificate for p <= q directly.
bool verify_fragment_certificate(const ConditionFragment& p, const ConditionFragment& q,
                                 const FragmentHints& h);

/// Certificate for p <= r from certificates for p <= q and q <= r.
FragmentHints compose_hints(const FragmentHints& pq, const FragmentHints& qr);

}  // namespace finloc
