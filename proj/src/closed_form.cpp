#include "tau2/closed_form.hpp"

#include <string>

namespace tau2 {

namespace {

// (g-1)! / (top)!, checking top >= 0.
ExactRational falling_ratio(long g, long top, long k) {
  if (top < 0) {
    throw RangeError("difference value at (g=" + std::to_string(g) + ", k=" + std::to_string(k) +
                     ") needs a negative factorial");
  }
  return make_rational(factorial(g - 1), factorial(top));
}

}  // namespace

ExactRational b_value(long g, long k) {
  if (!in_difference_domain(g, k)) {
    throw RangeError("b is defined for 0 <= k <= " + std::to_string(half_range(g) - 1) + " at g=" +
                     std::to_string(g) + ", got k=" + std::to_string(k));
  }
  const ExactRational prefactor = make_rational(double_factorial_odd(6 * g - 3 - 2 * k), double_factorial_odd(6 * g - 1));

  ExactRational branch;
  switch (k % 3) {
    case 2: {  // k = 3j - 1
      const long j = (k + 1) / 3;
      branch = make_rational(double_factorial_odd(6 * j - 1), factorial(j)) * falling_ratio(g, g - j, k) * (g - 2 * j);
      break;
    }
    case 0: {  // k = 3j
      const long j = k / 3;
      branch = -2 * make_rational(double_factorial_odd(6 * j + 1), factorial(j)) * falling_ratio(g, g - 1 - j, k);
      break;
    }
    default: {  // k = 3j + 1
      const long j = (k - 1) / 3;
      branch = 2 * make_rational(double_factorial_odd(6 * j + 3), factorial(j)) * falling_ratio(g, g - 1 - j, k);
      break;
    }
  }
  return prefactor * branch;
}

ExactRational a_closed(long g, long k) {
  check_key(g, k);
  if (k > half_range(g)) k = 3 * g - 1 - k;
  ExactRational a = 1;
  for (long i = 0; i < k; ++i) a += b_value(g, i);
  return a;
}

std::vector<ExactRational> a_closed_row(long g) {
  check_key(g, 0);
  const long n = row_size(g);
  std::vector<ExactRational> row(static_cast<std::size_t>(n));
  row[0] = 1;
  for (long k = 1; k <= half_range(g); ++k) row[k] = row[k - 1] + b_value(g, k - 1);
  for (long k = half_range(g) + 1; k < n; ++k) row[k] = row[n - 1 - k];
  return row;
}

ExactRational normalization_factor(long g, long k) {
  check_key(g, k);
  ExactInteger num;
  mpz_ui_pow_ui(num.get_mpz_t(), 24, static_cast<unsigned long>(g));
  num *= factorial(g) * double_factorial_odd(2 * k + 1) * double_factorial_odd(6 * g - 1 - 2 * k);
  return make_rational(num, double_factorial_odd(6 * g - 1));
}

ExactRational normalize(long g, long k, const ExactRational& correlator) {
  return normalization_factor(g, k) * correlator;
}

ExactRational denormalize(long g, long k, const ExactRational& normalized) {
  return normalized / normalization_factor(g, k);
}

ExactRational two_point_closed(long g, long k) { return denormalize(g, k, a_closed(g, k)); }

std::vector<ExactRational> two_point_closed_row(long g) {
  auto row = a_closed_row(g);
  for (long k = 0; k < row_size(g); ++k) row[k] = denormalize(g, k, row[k]);
  return row;
}

}  // namespace tau2
