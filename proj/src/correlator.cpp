#include "tau2/correlator.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace tau2 {

void check_key(long g, long k) {
  if (g < 1) throw RangeError("g must be >= 1, got " + std::to_string(g));
  if (k < 0 || k > 3 * g - 1) {
    throw RangeError("k must be in 0.." + std::to_string(3 * g - 1) + ", got " + std::to_string(k));
  }
}

bool TwoPointTable::contains(long g, long k) const {
  return g >= 1 && g <= max_genus_complete() && k >= 0 && k <= 3 * g - 1;
}

std::size_t TwoPointTable::size() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

const ExactRational& TwoPointTable::at(long g, long k) const {
  if (!contains(g, k)) {
    throw RangeError("no table entry for (g=" + std::to_string(g) + ", k=" + std::to_string(k) + ")");
  }
  return rows_[static_cast<std::size_t>(g - 1)][static_cast<std::size_t>(k)];
}

std::span<const ExactRational> TwoPointTable::row(long g) const {
  if (g < 1 || g > max_genus_complete()) throw RangeError("no table row for g=" + std::to_string(g));
  return rows_[static_cast<std::size_t>(g - 1)];
}

void TwoPointTable::append_row(std::vector<ExactRational> row) {
  const long g = max_genus_complete() + 1;
  if (static_cast<long>(row.size()) != row_size(g)) {
    throw std::invalid_argument("genus " + std::to_string(g) + " row needs " + std::to_string(row_size(g)) +
                                " values, got " + std::to_string(row.size()));
  }
  for (const auto& v : row) {
    if (sgn(v) <= 0) throw std::invalid_argument("non-positive correlator in genus " + std::to_string(g));
  }
  rows_.push_back(std::move(row));
}

std::map<CorrelatorKey, ExactRational> TwoPointTable::entries() const {
  std::map<CorrelatorKey, ExactRational> out;
  for (long g = 1; g <= max_genus_complete(); ++g) {
    for (long k = 0; k < row_size(g); ++k) out.emplace(CorrelatorKey{g, k}, at(g, k));
  }
  return out;
}

ExactRational one_point(long g) {
  if (g < 1) throw RangeError("one-point correlator needs g >= 1, got " + std::to_string(g));
  ExactInteger den;
  mpz_ui_pow_ui(den.get_mpz_t(), 24, static_cast<unsigned long>(g));
  den *= factorial(g);
  return make_rational(1, den);
}

ExactRational one_point_at(long d) {
  if (d < 1 || (d + 2) % 3 != 0) return 0;
  return one_point((d + 2) / 3);
}

ExactRational genus0_npoint(std::span<const long> ds) {
  const long n = static_cast<long>(ds.size());
  if (n < 3) throw std::invalid_argument("genus-0 correlator needs n >= 3 points");
  long sum = 0;
  for (long d : ds) {
    if (d < 0) return 0;
    sum += d;
  }
  if (sum != n - 3) return 0;
  return ExactRational(multinomial(ds));
}

std::map<CorrelatorKey, ExactRational> genus1_seed() {
  const ExactRational tau1 = one_point(1);
  // String: <tau_0 tau_2> = <tau_2 tau_0> = <tau_1>.
  // Dilaton: <tau_1 tau_1> = (2g - 2 + n) <tau_1> with g = 1, n = 1.
  return {
      {{1, 0}, tau1},
      {{1, 1}, tau1 * (2 * 1 - 2 + 1)},
      {{1, 2}, tau1},
  };
}

namespace {

// <tau_m tau_{3(g-1)-1-m}> from genus g-1, zero when either index is negative.
ExactRational lower(const TwoPointTable& table, long g, long m) {
  if (m < 0 || m > 3 * (g - 1) - 1) return 0;
  return table.at(g - 1, m);
}

// Everything on the right of the recursion at step s except the
// (2g-3-2s) <tau_s tau_{3g-1-s}> term.
ExactRational recursion_source(const TwoPointTable& table, long g, long s) {
  ExactRational genus_drop = lower(table, g, s - 3) + 3 * lower(table, g, s - 2) + 3 * lower(table, g, s - 1) +
                             lower(table, g, s);
  return genus_drop / 6 + one_point_at(s - 1) * one_point_at(3 * g - 3 - s);
}

void require_lower_genus(const TwoPointTable& table, long g) {
  if (g >= 2 && table.max_genus_complete() < g - 1) {
    throw IncompleteTableError("genus " + std::to_string(g) + " needs genus " + std::to_string(g - 1) +
                               " complete; table has " + std::to_string(table.max_genus_complete()));
  }
}

std::vector<ExactRational> recursive_prefix(long g, long last_k, const TwoPointTable& table) {
  require_lower_genus(table, g);
  std::vector<ExactRational> row;
  row.reserve(static_cast<std::size_t>(last_k + 1));
  if (g == 1) {
    const auto seed = genus1_seed();
    for (long k = 0; k <= last_k; ++k) row.push_back(seed.at({1, k}));
    return row;
  }
  row.push_back(one_point(g));
  for (long k = 1; k <= last_k; ++k) {
    const long s = k - 1;
    ExactRational rhs = (2 * g - 3 - 2 * s) * row.back() + recursion_source(table, g, s);
    row.push_back(rhs / (2 * s + 3));
  }
  return row;
}

}  // namespace

ExactRational two_point_recursive(long g, long k, const TwoPointTable& table) {
  check_key(g, k);
  return recursive_prefix(g, k, table).back();
}

std::vector<ExactRational> recursive_row(long g, const TwoPointTable& table) {
  check_key(g, 0);
  return recursive_prefix(g, row_size(g) - 1, table);
}

void extend_table(TwoPointTable& table, long g_max) {
  for (long g = table.max_genus_complete() + 1; g <= g_max; ++g) table.append_row(recursive_row(g, table));
}

TwoPointTable build_table(long g_max) {
  if (g_max < 1) throw RangeError("g_max must be >= 1, got " + std::to_string(g_max));
  TwoPointTable table;
  extend_table(table, g_max);
  return table;
}

ExactRational recursion_residual(const TwoPointTable& table, long g, long s) {
  if (g < 2 || s < 0 || s > 3 * g - 2) {
    throw RangeError("recursion step needs g >= 2 and 0 <= s <= 3g-2");
  }
  const ExactRational lhs = (2 * s + 3) * table.at(g, s + 1);
  const ExactRational rhs = (2 * g - 3 - 2 * s) * table.at(g, s) + recursion_source(table, g, s);
  return lhs - rhs;
}

std::string validate_table(const TwoPointTable& table) {
  auto where = [](long g, long k) { return " at (g=" + std::to_string(g) + ", k=" + std::to_string(k) + ")"; };
  const auto seed = genus1_seed();
  for (long g = 1; g <= table.max_genus_complete(); ++g) {
    const long last = row_size(g) - 1;
    for (long k = 0; k <= last; ++k) {
      if (sgn(table.at(g, k)) <= 0) return "non-positive value" + where(g, k);
      if (table.at(g, k) != table.at(g, last - k)) return "asymmetric value" + where(g, k);
    }
    if (table.at(g, 0) != one_point(g)) return "string endpoint mismatch" + where(g, 0);
    if (table.at(g, 1) != (2 * g - 1) * one_point(g)) return "dilaton endpoint mismatch" + where(g, 1);
    if (g == 1) {
      for (const auto& [key, value] : seed) {
        if (table.at(key) != value) return "genus-1 seed mismatch" + where(key.g, key.k);
      }
      continue;
    }
    for (long s = 0; s < last; ++s) {
      if (recursion_residual(table, g, s) != 0) return "recursion violated" + where(g, s + 1);
    }
  }
  return {};
}

void write_table(std::ostream& out, const TwoPointTable& table) {
  out << kCacheHeader << '\n';
  for (long g = 1; g <= table.max_genus_complete(); ++g) {
    for (long k = 0; k < row_size(g); ++k) out << g << '\t' << k << '\t' << to_string(table.at(g, k)) << '\n';
  }
}

TwoPointTable read_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCacheHeader) throw std::runtime_error("missing table header");

  TwoPointTable table;
  std::vector<ExactRational> row;
  long g = 1;
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    long lg = 0;
    long lk = 0;
    std::string value;
    std::string extra;
    if (!(fields >> lg >> lk >> value) || (fields >> extra)) {
      throw std::runtime_error("malformed table line " + std::to_string(line_no));
    }
    if (lg != g || lk != static_cast<long>(row.size())) {
      throw std::runtime_error("table line " + std::to_string(line_no) + " out of (g, k) order");
    }
    try {
      row.push_back(parse_rational(value));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("table line " + std::to_string(line_no) + ": " + e.what());
    }
    if (static_cast<long>(row.size()) == row_size(g)) {
      try {
        table.append_row(std::move(row));
      } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
      }
      row.clear();
      ++g;
    }
  }
  if (!row.empty()) throw std::runtime_error("incomplete genus " + std::to_string(g) + " in table");
  if (auto problem = validate_table(table); !problem.empty()) throw std::runtime_error(problem);
  return table;
}

}  // namespace tau2
