#include "tau2/verification.hpp"

#include <algorithm>

#include "tau2/closed_form.hpp"
#include "tau2/correlator.hpp"

namespace tau2 {

namespace {

void check_g_max(long g_max) {
  if (g_max < 1) throw RangeError("g_max must be >= 1, got " + std::to_string(g_max));
}

void check_step(long g, long k, long last, const char* what) {
  if (g < 2 || k < 0 || k > last) {
    throw RangeError(std::string(what) + " residual needs g >= 2 and 0 <= k <= " + std::to_string(last) +
                     ", got (g=" + std::to_string(g) + ", k=" + std::to_string(k) + ")");
  }
}

// Normalized values on demand, or from precomputed rows when scanning.
class AValues {
 public:
  AValues() = default;
  explicit AValues(long g_max) {
    for (long g = 1; g <= g_max; ++g) rows_.push_back(a_closed_row(g));
  }

  // a_{g,m}, zero outside 0 <= m <= 3g-1.
  ExactRational a(long g, long m) const {
    if (g < 1 || m < 0 || m > 3 * g - 1) return 0;
    if (g <= static_cast<long>(rows_.size())) return rows_[g - 1][m];
    return a_closed(g, m);
  }

  // <tau_m tau_{3g-1-m}>, zero when either index is negative.
  ExactRational correlator(long g, long m) const {
    if (g < 1 || m < 0 || m > 3 * g - 1) return 0;
    return denormalize(g, m, a(g, m));
  }

  // b_{g,m}: explicit inside the difference domain, otherwise the
  // difference of zero-extended a-values (b_{g,-1} = a_{g,0} = 1).
  ExactRational b(long g, long m) const {
    if (in_difference_domain(g, m)) return b_value(g, m);
    return a(g, m + 1) - a(g, m);
  }

 private:
  std::vector<std::vector<ExactRational>> rows_;
};

ExactRational rec_tau(const AValues& v, long g, long k) {
  const ExactRational lhs = (2 * k + 3) * v.correlator(g, k + 1);
  ExactRational rhs = (2 * g - 3 - 2 * k) * v.correlator(g, k);
  rhs += (v.correlator(g - 1, k - 3) + 3 * v.correlator(g - 1, k - 2) + 3 * v.correlator(g - 1, k - 1) +
          v.correlator(g - 1, k)) /
         6;
  rhs += one_point_at(k - 1) * one_point_at(3 * g - 3 - k);
  return lhs - rhs;
}

// 4g / ((6g-1)(6g-3)(6g-5))
ExactRational genus_coupling(long g) {
  return make_rational(4 * g, ExactInteger((6 * g - 1) * (6 * g - 3)) * (6 * g - 5));
}

// C(g, j) (2p+1)!! (2q+1)!! / (6g-1)!! for the one-point product terms.
ExactRational split_term(long g, long j, long p, long q) {
  return make_rational(binomial(g, j) * double_factorial_odd(2 * p + 1) * double_factorial_odd(2 * q + 1),
                       double_factorial_odd(6 * g - 1));
}

ExactRational rec_a(const AValues& v, long g, long k) {
  const long c1 = 2 * k + 1, c2 = 2 * k - 1, c3 = 2 * k - 3;
  const long d1 = 6 * g - 1 - 2 * k, d2 = 6 * g - 3 - 2 * k, d3 = 6 * g - 5 - 2 * k;

  const ExactRational lhs = d1 * v.a(g, k + 1);
  ExactRational lower = ExactInteger(c1 * c2) * c3 * v.a(g - 1, k - 3);
  lower += ExactInteger(3 * c1 * c2) * d1 * v.a(g - 1, k - 2);
  lower += ExactInteger(3 * c1 * d1) * d2 * v.a(g - 1, k - 1);
  lower += ExactInteger(d1 * d2) * d3 * v.a(g - 1, k);
  ExactRational rhs = (2 * g - 3 - 2 * k) * v.a(g, k) + genus_coupling(g) * lower;
  if (k % 3 == 2) rhs += split_term(g, (k + 1) / 3, k, 3 * g - 1 - k);
  return lhs - rhs;
}

ExactRational rec_b(const AValues& v, long g, long k) {
  const long c1 = 2 * k + 1, c2 = 2 * k - 1, c3 = 2 * k - 3;
  const long d1 = 6 * g - 3 - 2 * k, d2 = 6 * g - 5 - 2 * k, d3 = 6 * g - 7 - 2 * k;

  const ExactRational lhs = d1 * v.b(g, k + 1);
  ExactRational lower = ExactInteger(c1 * c2) * c3 * v.b(g - 1, k - 3);
  lower += ExactInteger(3 * c1 * c2) * d1 * v.b(g - 1, k - 2);
  lower += ExactInteger(3 * c1 * d1) * d2 * v.b(g - 1, k - 1);
  lower += ExactInteger(d1 * d2) * d3 * v.b(g - 1, k);
  ExactRational rhs = (2 * g - 3 - 2 * k) * v.b(g, k) + genus_coupling(g) * lower;
  if (k % 3 == 1) {
    // (2k+3)!! (6g-3-2k)!! = (2(k+1)+1)!! (6g-1-2(k+1))!!
    rhs += split_term(g, (k + 2) / 3, k + 1, 3 * g - 2 - k);
  } else if (k % 3 == 2) {
    rhs -= split_term(g, (k + 1) / 3, k, 3 * g - 1 - k);
  }
  return lhs - rhs;
}

long last_tau_step(long g) { return 3 * g - 2; }
long last_b_step(long g) { return half_range(g) - 2; }

template <typename Residual>
CheckReport scan_residual(std::string name, long g_max, long (*last)(long), Residual residual) {
  check_g_max(g_max);
  CheckReport report{std::move(name), g_max, 0, {}};
  const AValues values(g_max);
  for (long g = 2; g <= g_max; ++g) {
    for (long k = 0; k <= last(g); ++k) {
      ExactRational r = residual(values, g, k);
      ++report.checked;
      if (r != 0) report.failures.push_back({g, k, 0, std::move(r)});
    }
  }
  return report;
}

}  // namespace

ExactRational residual_rec_tau(long g, long k) {
  check_step(g, k, last_tau_step(g), "two-point");
  return rec_tau(AValues{}, g, k);
}

ExactRational residual_rec_a(long g, long k) {
  check_step(g, k, last_tau_step(g), "normalized");
  return rec_a(AValues{}, g, k);
}

ExactRational residual_rec_b(long g, long k) {
  check_step(g, k, last_b_step(g), "difference");
  return rec_b(AValues{}, g, k);
}

CheckReport cross_validate(long g_max) {
  check_g_max(g_max);
  CheckReport report{"cross", g_max, 0, {}};
  const TwoPointTable table = build_table(g_max);
  for (long g = 1; g <= g_max; ++g) {
    const auto closed = two_point_closed_row(g);
    for (long k = 0; k < row_size(g); ++k) {
      ++report.checked;
      if (closed[k] != table.at(g, k)) report.failures.push_back({g, k, table.at(g, k), closed[k]});
    }
  }
  return report;
}

CheckReport check_bounds(long g_max) {
  check_g_max(g_max);
  CheckReport report{"bounds", g_max, 0, {}};
  for (long g = 2; g <= g_max; ++g) {
    const auto row = a_closed_row(g);
    const ExactRational lower = make_rational(6 * g - 3, 6 * g - 1);
    for (long k = 2; k <= 3 * g - 3; ++k) {
      ++report.checked;
      if (row[k] <= lower) {
        report.failures.push_back({g, k, lower, row[k]});
      } else if (row[k] >= 1) {
        report.failures.push_back({g, k, 1, row[k]});
      }
    }
  }
  return report;
}

CheckReport check_symmetry(long g_max) {
  check_g_max(g_max);
  CheckReport report{"symmetry", g_max, 0, {}};
  const TwoPointTable table = build_table(g_max);
  for (long g = 1; g <= g_max; ++g) {
    for (long k = 0; k < row_size(g); ++k) {
      ++report.checked;
      const auto& mirror = table.at(g, 3 * g - 1 - k);
      if (table.at(g, k) != mirror) report.failures.push_back({g, k, mirror, table.at(g, k)});
    }
  }
  return report;
}

CheckReport check_positivity(long g_max) {
  check_g_max(g_max);
  CheckReport report{"positivity", g_max, 0, {}};
  const TwoPointTable table = build_table(g_max);
  for (long g = 1; g <= g_max; ++g) {
    for (long k = 0; k < row_size(g); ++k) {
      ++report.checked;
      if (sgn(table.at(g, k)) <= 0) report.failures.push_back({g, k, 0, table.at(g, k)});
    }
  }
  return report;
}

CheckReport check_residual_tau(long g_max) { return scan_residual("residual-tau", g_max, last_tau_step, rec_tau); }
CheckReport check_residual_a(long g_max) { return scan_residual("residual-a", g_max, last_tau_step, rec_a); }
CheckReport check_residual_b(long g_max) { return scan_residual("residual-b", g_max, last_b_step, rec_b); }

const std::vector<std::string>& default_checks() {
  static const std::vector<std::string> names{"cross", "symmetry", "bounds", "residual-tau", "residual-a", "residual-b"};
  return names;
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = [] {
    auto all = default_checks();
    all.emplace_back("positivity");
    return all;
  }();
  return names;
}

CheckReport run_check(std::string_view name, long g_max) {
  if (name == "cross") return cross_validate(g_max);
  if (name == "symmetry") return check_symmetry(g_max);
  if (name == "bounds") return check_bounds(g_max);
  if (name == "positivity") return check_positivity(g_max);
  if (name == "residual-tau") return check_residual_tau(g_max);
  if (name == "residual-a") return check_residual_a(g_max);
  if (name == "residual-b") return check_residual_b(g_max);
  throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"g", f.g}, {"k", f.k}, {"expected", to_string(f.expected)}, {"actual", to_string(f.actual)}});
  }
  return {{"check", report.check_name},
          {"g_max", report.g_max},
          {"passed", report.passed()},
          {"checked", report.checked},
          {"failures", std::move(failures)}};
}

}  // namespace tau2
