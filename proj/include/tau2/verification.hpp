#pragma once

// Cross-checks between the recursive and closed-form paths. Residuals are
// evaluated on closed-form values: the recursive path satisfies the genus
// recursion by construction, so only a closed-form residual says anything.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tau2/exact.hpp"

namespace tau2 {

struct CheckFailure {
  long g = 0;
  long k = 0;
  ExactRational expected;
  ExactRational actual;

  bool operator==(const CheckFailure&) const = default;
};

struct CheckReport {
  std::string check_name;
  long g_max = 0;
  std::size_t checked = 0;
  /// Sorted by (g, k).
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// LHS - RHS of the two-point genus recursion at step k (0 <= k <= 3g-2),
/// all two-point values from the closed form.
ExactRational residual_rec_tau(long g, long k);

/// LHS - RHS of the recursion for a_{g,k} (0 <= k <= 3g-2) on closed-form a.
ExactRational residual_rec_a(long g, long k);

/// LHS - RHS of the recursion for b_{g,k+1}, for k >= 0 with k+1 in the
/// difference domain, on the explicit b-values.
ExactRational residual_rec_b(long g, long k);

/// Recursive table vs closed form for every (g, k) with g <= g_max.
CheckReport cross_validate(long g_max);

/// (6g-3)/(6g-1) < a_{g,k} < 1 for 2 <= g <= g_max, 2 <= k <= 3g-3.
CheckReport check_bounds(long g_max);

/// table(g, k) == table(g, 3g-1-k) on the recursive path.
CheckReport check_symmetry(long g_max);

/// table(g, k) > 0 on the recursive path.
CheckReport check_positivity(long g_max);

/// Each residual over its full domain for 2 <= g <= g_max.
CheckReport check_residual_tau(long g_max);
CheckReport check_residual_a(long g_max);
CheckReport check_residual_b(long g_max);

/// "cross", "symmetry", "bounds", "residual-tau", "residual-a", "residual-b".
const std::vector<std::string>& default_checks();

/// Names accepted by run_check(): default_checks() plus "positivity".
const std::vector<std::string>& known_checks();

/// Throws std::invalid_argument on an unknown name, RangeError on g_max < 1.
CheckReport run_check(std::string_view name, long g_max);

nlohmann::json to_json(const CheckReport& report);

}  // namespace tau2
