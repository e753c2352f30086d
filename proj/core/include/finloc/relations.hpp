#pragma once

// Localization relations evaluated on finite windows, and exact finite
// analogs of the unbounding and dominating numbers of a relation.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finloc/finsets.hpp"

namespace finloc {

/// Outcome of evaluating an inner predicate at every horizon-safe index.
///
/// "For almost all n" reads as `tail_holds_from` being present; "for
/// infinitely many n" is left to the caller as a threshold on the witness
/// count.
struct QuantifierReport {
  std::vector<std::size_t> witnesses;
  /// Largest index whose verdict cannot change past the horizon; empty when
  /// no index is evaluable.
  std::optional<std::size_t> evaluated_up_to;
  /// Least t with every index in [t, evaluated_up_to] a witness.
  std::optional<std::size_t> tail_holds_from;

  std::size_t count() const noexcept { return witnesses.size(); }
  bool is_witness(std::size_t n) const;
};

/// Builds a report from a per-index predicate table.
QuantifierReport report_from(const std::vector<bool>& holds);

QuantifierReport eval_R_forall_k(const WSet& x, const BlockFamily& family, std::size_t k);
QuantifierReport eval_R_exists_k(const WSet& x, const BlockFamily& family, std::size_t k);

/// |[mu_Y(n), mu_Y(n+1)) ∩ X| for n < |Y|-1. X must be known up to max(Y).
std::vector<std::size_t> gap_counts(const WSet& x, const WSet& y);

/// Runs of k consecutive Y-gaps each holding at least `min_points` points of X.
QuantifierReport eval_S_k(const WSet& x, const WSet& y, std::size_t k,
                          std::size_t min_points = 2);

/// Least n starting m consecutive rich gaps, if any on the window.
std::optional<std::size_t> eval_S_plus(const WSet& x, const WSet& y, std::size_t m,
                                       std::size_t min_points = 2);

/// n is a witness when all 2^n gaps from index 2^n on are rich.
QuantifierReport eval_S_plus_eps(const WSet& x, const WSet& y);

/// n is a witness when the phi(n) gaps from n on are rich. phi must be
/// strictly increasing on its domain.
QuantifierReport eval_S_plus_phi(const WSet& x, const WSet& y, std::span<const Nat> phi);

/// A total relation between two finite universes of opaque points.
class FiniteRelationInstance {
 public:
  FiniteRelationInstance(std::vector<std::string> left, std::vector<std::string> right,
                         std::vector<std::vector<bool>> holds);
  /// Points labelled "0", "1", ...
  static FiniteRelationInstance from_table(std::vector<std::vector<bool>> holds);

  std::size_t left_size() const noexcept { return left_.size(); }
  std::size_t right_size() const noexcept { return right_.size(); }
  const std::vector<std::string>& left() const noexcept { return left_; }
  const std::vector<std::string>& right() const noexcept { return right_; }
  bool holds(std::size_t x, std::size_t y) const { return holds_.at(x).at(y); }
  const std::vector<std::vector<bool>>& table() const noexcept { return holds_; }

  /// Each row and each column has both a related and an unrelated entry,
  /// i.e. R and its complement have full domain and range.
  bool satisfies_dom_rng() const;
  /// cR^{-1}: (y, x) related iff (x, y) is not related in R.
  FiniteRelationInstance complement_inverse() const;

 private:
  std::vector<std::string> left_;
  std::vector<std::string> right_;
  std::vector<std::vector<bool>> holds_;
};

struct OptimalSet {
  std::size_t size = 0;
  std::vector<std::size_t> members;  // indices into the searched universe
};

inline constexpr std::size_t kExhaustiveUniverseBound = 24;

/// Least D ⊆ right with every left point related to some member of D.
OptimalSet d_fin(const FiniteRelationInstance& inst);
/// Least B ⊆ left such that every right point is unrelated to some member of B.
OptimalSet b_fin(const FiniteRelationInstance& inst);

}  // namespace finloc
