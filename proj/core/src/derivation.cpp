#include "finloc/derivation.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "finloc/error.hpp"

namespace finloc {

Derivation Derivation::of_part(std::size_t i) {
  Derivation d;
  d.part = i;
  return d;
}

Derivation Derivation::upper_half_of(Derivation in) {
  Derivation d;
  d.op = Op::upper_half;
  d.inputs.push_back(std::move(in));
  return d;
}

Derivation Derivation::refine_of(Derivation in, Creature result) {
  Derivation d;
  d.op = Op::refine;
  d.inputs.push_back(std::move(in));
  d.result = std::move(result);
  return d;
}

Derivation Derivation::build_of(std::vector<Derivation> ins, Creature result) {
  Derivation d;
  d.op = Op::build;
  d.inputs = std::move(ins);
  d.result = std::move(result);
  return d;
}

std::size_t steps(const Derivation& d) {
  std::size_t n = d.op == Derivation::Op::part ? 0 : 1;
  for (const auto& in : d.inputs) n += steps(in);
  return n;
}

Creature replay(const Derivation& d, std::span<const Creature> parts) {
  using Op = Derivation::Op;
  auto bad = [](const std::string& why) { fail(Errc::invalid_argument, "bad certificate: " + why); };
  switch (d.op) {
    case Op::part:
      if (d.part >= parts.size()) bad("part index out of range");
      return parts[d.part];
    case Op::upper_half:
      if (d.inputs.size() != 1) bad("upper half takes one input");
      return upper_half(replay(d.inputs[0], parts));
    case Op::refine: {
      if (d.inputs.size() != 1 || !d.result) bad("refine takes one input and a result");
      if (!refines(replay(d.inputs[0], parts), *d.result)) bad("result does not refine its input");
      return *d.result;
    }
    case Op::build: {
      if (d.inputs.empty() || !d.result) bad("build takes inputs and a result");
      std::vector<Creature> built;
      for (const auto& in : d.inputs) built.push_back(replay(in, parts));
      if (!sigma_member(*d.result, built)) bad("result is not built of its inputs");
      return *d.result;
    }
  }
  fail(Errc::invalid_argument, "bad certificate: unknown operation");
}

bool verify_derivation(const Derivation& d, std::span<const Creature> parts, const Creature& t) {
  try {
    return same_creature(replay(d, parts), t);
  } catch (const Error&) {
    return false;
  }
}

Derivation reindex(const Derivation& d, std::size_t offset) {
  Derivation out = d;
  if (out.op == Derivation::Op::part) out.part += offset;
  for (auto& in : out.inputs) in = reindex(in, offset);
  return out;
}

Derivation compose(const Derivation& outer, std::span<const Derivation> inner) {
  if (outer.op == Derivation::Op::part) {
    if (outer.part >= inner.size()) fail(Errc::invalid_argument, "compose: part out of range");
    return inner[outer.part];
  }
  Derivation out = outer;
  for (auto& in : out.inputs) in = compose(in, inner);
  return out;
}

namespace {

class Searcher {
 public:
  explicit Searcher(std::span<const Creature> parts) : parts_(parts) {}

  std::optional<Derivation> find(const Creature& t, std::size_t depth) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (same_creature(t, parts_[i])) return Derivation::of_part(i);
    }
    if (auto d = refine_of_iterated_half(t, depth)) return d;
    if (depth == 0) return std::nullopt;
    if (auto d = build_from_cones(t, depth)) return d;
    return inverse_half(t, depth);
  }

 private:
  std::optional<Derivation> refine_of_iterated_half(const Creature& t, std::size_t depth) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      const auto& p = parts_[i];
      if (p.k() != t.k() || p.root().L != t.root().L || p.root().R != t.root().R) continue;
      Creature u = p;
      Derivation du = Derivation::of_part(i);
      for (std::size_t j = 0; j <= depth; ++j) {
        if (same_creature(u, t)) return du;
        if (j + 1 <= depth && refines(u, t)) return Derivation::refine_of(du, t);
        if (j == depth || weight(u) < 2) break;  // further halves change nothing
        u = upper_half(u);
        du = Derivation::upper_half_of(du);
      }
    }
    return std::nullopt;
  }

  std::optional<Derivation> build_from_cones(const Creature& t, std::size_t depth) {
    const auto& kids = t.root().children;
    if (kids.empty()) return std::nullopt;
    std::vector<Derivation> ins;
    for (std::size_t c : kids) {
      auto d = find(t.cone(c), depth - 1);
      if (!d) return std::nullopt;
      ins.push_back(std::move(*d));
    }
    return Derivation::build_of(std::move(ins), t);
  }

  std::optional<Derivation> inverse_half(const Creature& t, std::size_t depth) {
    const Nat w = weight(t);
    for (Nat h : {w, w - 1}) {
      if (w == 0 || h == 0) continue;
      auto lowered = lower_shifts(t, h);
      if (!lowered || !same_creature(upper_half(*lowered), t)) continue;
      if (auto d = find(*lowered, depth - 1)) return Derivation::upper_half_of(std::move(*d));
    }
    return std::nullopt;
  }

  std::span<const Creature> parts_;
};

bool is_subset(const std::vector<Nat>& a, const std::vector<Nat>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Nat> set_union(const std::vector<Nat>& a, const std::vector<Nat>& b) {
  std::vector<Nat> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// w ⊆ w' ⊆ w ∪ ⋃_{i<n0} cont(t_i)
bool w_clause(const ConditionFragment& p, const ConditionFragment& q,
              const std::vector<std::vector<Nat>>& conts, std::size_t n0) {
  if (!is_subset(p.w, q.w)) return false;
  std::vector<Nat> allowed = p.w;
  for (std::size_t i = 0; i < n0; ++i) allowed = set_union(allowed, conts[i]);
  return is_subset(q.w, allowed);
}

}  // namespace

SigmaStarResult sigma_star_member(const Creature& t, std::span<const Creature> parts,
                                  std::size_t depth_cap) {
  Searcher s(parts);
  auto d = s.find(t, depth_cap);
  if (!d) return {};
  return {true, std::move(d)};
}

void check_fragment(const ConditionFragment& f) {
  if (!std::is_sorted(f.w.begin(), f.w.end()) ||
      std::adjacent_find(f.w.begin(), f.w.end()) != f.w.end()) {
    fail(Errc::invalid_argument, "w must be strictly increasing");
  }
  for (std::size_t i = 0; i < f.creatures.size(); ++i) {
    const auto& r = f.creatures[i].root();
    if (f.creatures[i].k() != f.creatures[0].k()) {
      fail(Errc::invalid_argument, "creatures of a fragment share k");
    }
    if (i == 0 && !f.w.empty() && f.w.back() >= r.L) {
      fail(Errc::interval_overlap, "max(w) must lie below the first creature");
    }
    if (i > 0 && f.creatures[i - 1].root().R >= r.L) {
      fail(Errc::interval_overlap, "creature intervals must increase");
    }
  }
}

bool verify_fragment_certificate(const ConditionFragment& p, const ConditionFragment& q,
                                 const FragmentHints& h) {
  const std::size_t r = q.creatures.size();
  if (h.cuts.size() != r + 1 || h.derivations.size() != r) return false;
  for (std::size_t i = 0; i + 1 < h.cuts.size(); ++i) {
    if (h.cuts[i] >= h.cuts[i + 1]) return false;
  }
  if (h.cuts.back() > p.creatures.size()) return false;
  std::vector<std::vector<Nat>> conts;
  for (std::size_t i = 0; i < h.cuts[0]; ++i) conts.push_back(contribution(p.creatures[i]));
  if (!w_clause(p, q, conts, h.cuts[0])) return false;
  const std::span<const Creature> all(p.creatures);
  for (std::size_t i = 0; i < r; ++i) {
    auto group = all.subspan(h.cuts[i], h.cuts[i + 1] - h.cuts[i]);
    if (!verify_derivation(h.derivations[i], group, q.creatures[i])) return false;
  }
  return true;
}

FragmentVerdict fragment_leq(const ConditionFragment& p, const ConditionFragment& q,
                             const FragmentHints* hints, std::size_t depth_cap) {
  check_fragment(p);
  check_fragment(q);
  if (hints && verify_fragment_certificate(p, q, *hints)) {
    return {Verdict::holds, *hints, "certificate verified"};
  }
  const std::size_t m = p.creatures.size();
  const std::size_t r = q.creatures.size();
  std::vector<std::vector<Nat>> pc, qc;
  for (const auto& t : p.creatures) pc.push_back(contribution(t));
  for (const auto& t : q.creatures) qc.push_back(contribution(t));

  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::optional<Derivation>> memo;
  auto derive = [&](std::size_t i, std::size_t lo, std::size_t hi) -> const std::optional<Derivation>& {
    auto key = std::make_tuple(i, lo, hi);
    auto it = memo.find(key);
    if (it == memo.end()) {
      std::span<const Creature> group(p.creatures.data() + lo, hi - lo);
      auto res = sigma_star_member(q.creatures[i], group, depth_cap);
      it = memo.emplace(key, std::move(res.certificate)).first;
    }
    return it->second;
  };
  auto plausible = [&](std::size_t i, std::size_t lo, std::size_t hi) {
    if (q.creatures[i].k() != p.creatures[lo].k()) return false;
    std::vector<Nat> u;
    for (std::size_t j = lo; j < hi; ++j) u = set_union(u, pc[j]);
    return is_subset(qc[i], u);
  };

  std::vector<std::size_t> cuts;
  std::vector<Derivation> derivs;
  // Groups for q creatures i.. starting at p index `lo`; with `search` off
  // only the cheap filters are applied.
  auto extend = [&](auto&& self, std::size_t i, std::size_t lo, bool search) -> bool {
    if (i == r) return true;
    for (std::size_t hi = lo + 1; hi <= m; ++hi) {
      if (!plausible(i, lo, hi)) continue;
      if (!search) {
        if (self(self, i + 1, hi, false)) return true;
        continue;
      }
      const auto& d = derive(i, lo, hi);
      if (!d) continue;
      cuts.push_back(hi);
      derivs.push_back(*d);
      if (self(self, i + 1, hi, true)) return true;
      cuts.pop_back();
      derivs.pop_back();
    }
    return false;
  };

  bool any_plausible = false;
  for (std::size_t n0 = 0; n0 <= m; ++n0) {
    if (r > 0 && n0 == m) break;
    if (!w_clause(p, q, pc, n0)) continue;
    if (!extend(extend, 0, n0, false)) continue;
    any_plausible = true;
    cuts = {n0};
    derivs.clear();
    if (extend(extend, 0, n0, true)) {
      FragmentHints h{cuts, derivs};
      return {Verdict::holds, std::move(h), "search found a grouping"};
    }
  }
  if (!any_plausible) {
    return {Verdict::fails, std::nullopt,
            "every grouping violates the w clause or contribution containment"};
  }
  return {Verdict::cap_limited, std::nullopt, "no derivation found within the depth cap"};
}

FragmentHints compose_hints(const FragmentHints& pq, const FragmentHints& qr) {
  FragmentHints out;
  for (std::size_t c : qr.cuts) {
    if (c >= pq.cuts.size()) fail(Errc::invalid_argument, "certificates do not chain");
    out.cuts.push_back(pq.cuts[c]);
  }
  for (std::size_t j = 0; j < qr.derivations.size(); ++j) {
    std::vector<Derivation> inner;
    for (std::size_t qi = qr.cuts[j]; qi < qr.cuts[j + 1]; ++qi) {
      inner.push_back(reindex(pq.derivations.at(qi), pq.cuts[qi] - out.cuts[j]));
    }
    out.derivations.push_back(compose(qr.derivations[j], inner));
  }
  return out;
}

}  // namespace finloc
