#pragma once

// Two-point correlators <tau_k tau_{3g-1-k}> by genus recursion, plus the
// one-point and genus-0 correlators it is anchored on.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tau2/exact.hpp"

namespace tau2 {

/// Raised for (g, k) outside 1 <= g, 0 <= k <= 3g-1 and similar
/// preconditions on user-supplied indices.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The recursion was asked for genus g without genus g-1 being present.
class IncompleteTableError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Indexes <tau_k tau_{3g-1-k}>.
struct CorrelatorKey {
  long g = 1;
  long k = 0;

  long second_index() const { return 3 * g - 1 - k; }
  auto operator<=>(const CorrelatorKey&) const = default;
};

/// Number of two-point correlators in genus g (k = 0..3g-1).
inline long row_size(long g) { return 3 * g; }

/// Throws RangeError unless g >= 1 and 0 <= k <= 3g-1.
void check_key(long g, long k);

/// Correlators for genera 1..max_genus_complete(), each genus stored whole.
/// Values of a genus never change once appended.
class TwoPointTable {
 public:
  TwoPointTable() = default;

  long max_genus_complete() const { return static_cast<long>(rows_.size()); }
  bool contains(long g, long k) const;
  std::size_t size() const;

  /// Throws RangeError for a key that is not stored.
  const ExactRational& at(long g, long k) const;
  const ExactRational& at(const CorrelatorKey& key) const { return at(key.g, key.k); }
  std::span<const ExactRational> row(long g) const;

  /// Appends genus max_genus_complete()+1. Requires exactly 3g values, all
  /// strictly positive.
  void append_row(std::vector<ExactRational> row);

  /// Key-ordered view.
  std::map<CorrelatorKey, ExactRational> entries() const;

  bool operator==(const TwoPointTable&) const = default;

 private:
  std::vector<std::vector<ExactRational>> rows_;
};

/// <tau_{3g-2}> = 1/(24^g g!) for g >= 1.
ExactRational one_point(long g);

/// One-point symbol at an arbitrary integer index; exact 0 unless
/// d = 3g-2 for some g >= 1.
ExactRational one_point_at(long d);

/// Kontsevich's genus-0 value (n-3)!/prod(d_i!), or 0 if an index is
/// negative or sum(d) != n-3. Throws std::invalid_argument for n < 3.
ExactRational genus0_npoint(std::span<const long> ds);

/// Genus-1 two-point correlators from the string and dilaton equations.
std::map<CorrelatorKey, ExactRational> genus1_seed();

/// Solves the genus recursion for <tau_k tau_{3g-1-k}>. For g >= 2 the
/// table must hold genus g-1 complete; genus g is rebuilt from k = 0.
ExactRational two_point_recursive(long g, long k, const TwoPointTable& table);

/// Row g computed from row g-1 of the table, left to right over the full
/// k range.
std::vector<ExactRational> recursive_row(long g, const TwoPointTable& table);

/// Appends genera until max_genus_complete() >= g_max.
void extend_table(TwoPointTable& table, long g_max);

TwoPointTable build_table(long g_max);

/// LHS - RHS of the genus recursion at step index s (0 <= s <= 3g-2),
/// evaluated on stored values of genus g and g-1.
ExactRational recursion_residual(const TwoPointTable& table, long g, long s);

/// Empty when the table satisfies positivity, symmetry, both endpoint
/// identities, and the genus recursion for every stored entry; otherwise a
/// description of the first violation.
std::string validate_table(const TwoPointTable& table);

// Cache file: "tau2-table v1" header, then "g\tk\tp/q" lines sorted by (g, k).
inline constexpr const char* kCacheHeader = "tau2-table v1";

void write_table(std::ostream& out, const TwoPointTable& table);

/// Parses and validates. Throws std::runtime_error on malformed text or a
/// failed validation.
TwoPointTable read_table(std::istream& in);

}  // namespace tau2
