#include "tau2/exact.hpp"

#include <deque>
#include <mutex>

namespace tau2 {

namespace {

// Elements of a deque keep their addresses across push_back, so references
// handed out under the lock stay valid after the lock is released.
class ProductMemo {
 public:
  // step == 1 gives n!, step == 2 gives odd double factorials indexed by
  // (m + 1) / 2.
  explicit ProductMemo(long step) : step_(step) { values_.emplace_back(1); }

  const ExactInteger& get(std::size_t index) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= index) {
      const long i = static_cast<long>(values_.size());
      const long factor = step_ == 1 ? i : 2 * i - 1;
      values_.push_back(values_.back() * factor);
    }
    return values_[index];
  }

 private:
  long step_;
  std::mutex mutex_;
  std::deque<ExactInteger> values_;
};

ProductMemo& factorial_memo() {
  static ProductMemo memo(1);
  return memo;
}

ProductMemo& odd_memo() {
  static ProductMemo memo(2);
  return memo;
}

}  // namespace

ExactRational make_rational(const ExactInteger& num, const ExactInteger& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

const ExactInteger& factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number " + std::to_string(n));
  return factorial_memo().get(static_cast<std::size_t>(n));
}

const ExactInteger& double_factorial_odd(long m) {
  if (m < -1 || m % 2 == 0) {
    throw std::invalid_argument("double_factorial_odd needs odd m >= -1, got " + std::to_string(m));
  }
  return odd_memo().get(static_cast<std::size_t>((m + 1) / 2));
}

ExactInteger multinomial(std::span<const long> parts) {
  long total = 0;
  ExactInteger den = 1;
  for (long p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial part must be >= 0");
    total += p;
    den *= factorial(p);
  }
  ExactInteger result;
  mpz_divexact(result.get_mpz_t(), factorial(total).get_mpz_t(), den.get_mpz_t());
  return result;
}

ExactInteger binomial(long n, long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  ExactInteger result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return result;
}

std::string to_string(const ExactRational& value) { return value.get_str(10); }

ExactRational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    if (s.size() > 1 && s.front() == '0') return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };

  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false) || num == "-0") {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }

  const ExactInteger num_value{std::string(num)};
  const ExactInteger den_value{std::string(den)};
  if (den_value == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  ExactRational value{num_value, den_value};
  value.canonicalize();
  if (to_string(value) != text) {
    throw std::invalid_argument("rational '" + std::string(text) + "' is not in lowest terms");
  }
  return value;
}

std::size_t bit_size(const ExactRational& value) {
  return mpz_sizeinbase(value.get_num_mpz_t(), 2) + mpz_sizeinbase(value.get_den_mpz_t(), 2);
}

}  // namespace tau2
