#pragma once

// Nice norms on finite sets of successor labels. Tables hold explicit values
// on every subset of a small base; log norms are floor(log2 |A|) and are
// evaluated by cardinality, so they scale to very wide nodes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "finloc/finsets.hpp"

namespace finloc {

inline constexpr std::size_t kMaxTableBase = 16;

struct TableNorm {
  std::vector<Nat> base;      // sorted labels
  std::vector<Nat> values;    // indexed by bitmask over `base`
};

struct LogNorm {};

/// A norm with a symbolic downward shift: value(A) = max(0, raw(A) - shift).
/// Upper halves only ever grow the shift, which keeps them invertible.
class Norm {
 public:
  Norm() = default;
  static Norm table(std::vector<Nat> base, std::vector<Nat> values, Nat shift = 0);
  static Norm log(Nat shift = 0);

  bool is_log() const noexcept { return std::holds_alternative<LogNorm>(kind_); }
  const TableNorm* as_table() const noexcept { return std::get_if<TableNorm>(&kind_); }
  Nat shift() const noexcept { return shift_; }
  Norm shifted(Nat extra) const;
  /// Lowers the shift; throws invalid-argument when it would go negative.
  Norm unshifted(Nat amount) const;

  /// Value on a sorted subset of labels. Table norms require the subset to
  /// lie inside the base.
  Nat value(std::span<const Nat> subset) const;
  /// Log norms only: value on any set of the given size.
  Nat value_by_size(std::size_t size) const;

 private:
  std::variant<TableNorm, LogNorm> kind_{LogNorm{}};
  Nat shift_ = 0;
};

/// floor(log2 max(1, n))
Nat floor_log2(std::size_t n) noexcept;

struct NormViolation {
  /// Subsets of the base as bitmasks; `b` is unused for the n(A) > 0 axiom
  /// and `c` is the offending singleton for the singleton axiom.
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  enum class Axiom { monotone, bisection, positive, singleton } axiom = Axiom::monotone;
};

/// Checks the four axioms of a nice norm on the given labels (all subsets).
/// Throws table-not-total if a table norm does not cover the labels, and
/// invalid-argument for more than kMaxTableBase labels unless the norm is a
/// log norm (which is then checked by cardinality).
std::optional<NormViolation> validate_norm(const Norm& norm, std::span<const Nat> labels);

/// Whether two norms agree on every subset of `labels`.
bool norms_agree(const Norm& a, const Norm& b, std::span<const Nat> labels);

}  // namespace finloc
