#include "tau2/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tau2/closed_form.hpp"
#include "tau2/correlator.hpp"
#include "tau2/verification.hpp"

namespace tau2::cli {

namespace {

using Clock = std::chrono::steady_clock;
using Millis = std::chrono::duration<double, std::milli>;

const std::map<std::string, Method> kMethods{
    {"closed", Method::closed}, {"recursive", Method::recursive}, {"both", Method::both}};
const std::map<std::string, Format> kFormats{{"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};

const char* method_name(Method m) {
  switch (m) {
    case Method::closed: return "closed";
    case Method::recursive: return "recursive";
    default: return "both";
  }
}

struct PathMismatch {
  long g;
  long k;
  ExactRational closed;
  ExactRational recursive;
};

struct Row {
  long k;
  ExactRational correlator;
  ExactRational normalized;
};

void report_mismatch(std::ostream& err, const PathMismatch& m) {
  err << "error: paths disagree at (g=" << m.g << ", k=" << m.k << "): closed " << to_string(m.closed)
      << ", recursive " << to_string(m.recursive) << '\n';
}

// Correlators of genus g by the requested method; extends `table` when the
// recursive path runs. Returns the first disagreement for Method::both.
std::optional<PathMismatch> compute_row(long g, Method method, TwoPointTable& table,
                                        std::vector<ExactRational>& row) {
  if (method == Method::closed) {
    row = two_point_closed_row(g);
    return std::nullopt;
  }
  extend_table(table, g - 1);
  row = recursive_row(g, table);
  if (method == Method::both) {
    const auto closed = two_point_closed_row(g);
    for (long k = 0; k < row_size(g); ++k) {
      if (closed[k] != row[k]) return PathMismatch{g, k, closed[k], row[k]};
    }
  }
  return std::nullopt;
}

void emit_rows(std::ostream& out, Format format, long g, const std::vector<Row>& rows) {
  switch (format) {
    case Format::plain:
      for (const auto& r : rows) {
        out << g << ' ' << r.k << ' ' << to_string(r.correlator) << ' ' << to_string(r.normalized) << '\n';
      }
      break;
    case Format::csv:
      out << "g,k,correlator,normalized\n";
      for (const auto& r : rows) {
        out << g << ',' << r.k << ',' << to_string(r.correlator) << ',' << to_string(r.normalized) << '\n';
      }
      break;
    case Format::json: {
      nlohmann::json j_rows = nlohmann::json::array();
      for (const auto& r : rows) {
        j_rows.push_back(
            {{"k", r.k}, {"correlator", to_string(r.correlator)}, {"normalized", to_string(r.normalized)}});
      }
      out << nlohmann::json{{"g", g}, {"rows", std::move(j_rows)}}.dump() << '\n';
      break;
    }
  }
}

int cmd_value(long g, long k, Method method, Format format, std::ostream& out, std::ostream& err) {
  try {
    check_key(g, k);
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  ExactRational value;
  if (method != Method::recursive) value = two_point_closed(g, k);
  if (method != Method::closed) {
    TwoPointTable table;
    extend_table(table, g - 1);
    const ExactRational recursive = two_point_recursive(g, k, table);
    if (method == Method::both && recursive != value) {
      report_mismatch(err, {g, k, value, recursive});
      return kExitMismatch;
    }
    value = recursive;
  }
  const ExactRational normalized = normalize(g, k, value);

  switch (format) {
    case Format::plain:
      out << to_string(value) << '\n' << to_string(normalized) << '\n';
      break;
    case Format::csv:
      out << "g,k,correlator,normalized\n"
          << g << ',' << k << ',' << to_string(value) << ',' << to_string(normalized) << '\n';
      break;
    case Format::json:
      out << nlohmann::json{{"g", g},
                            {"k", k},
                            {"correlator", to_string(value)},
                            {"normalized", to_string(normalized)},
                            {"method", method_name(method)}}
                 .dump()
          << '\n';
      break;
  }
  return kExitOk;
}

TwoPointTable load_cache(const std::filesystem::path& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) return {};
  try {
    return read_table(in);
  } catch (const std::exception& e) {
    err << "warning: discarding cache " << path.string() << ": " << e.what() << '\n';
    return {};
  }
}

void store_cache(const std::filesystem::path& path, const TwoPointTable& table, std::ostream& err) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    write_table(out, table);
    if (!out) {
      err << "warning: could not write cache " << path.string() << '\n';
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) err << "warning: could not write cache " << path.string() << ": " << ec.message() << '\n';
}

int cmd_table(long g, Method method, Format format, const std::string& cache_path, std::ostream& out,
              std::ostream& err) {
  if (g < 1) {
    err << "error: g must be >= 1, got " << g << '\n';
    return kExitUsage;
  }

  const auto start = Clock::now();
  std::vector<ExactRational> correlators;
  if (cache_path.empty()) {
    TwoPointTable table;
    if (auto mismatch = compute_row(g, method, table, correlators)) {
      report_mismatch(err, *mismatch);
      return kExitMismatch;
    }
  } else {
    TwoPointTable table = load_cache(cache_path, err);
    const long cached = table.max_genus_complete();
    TwoPointTable recursive_table;
    for (long gg = cached + 1; gg <= g; ++gg) {
      std::vector<ExactRational> row;
      // The cached table already holds genera 1..gg-1 for the recursion.
      if (auto mismatch = compute_row(gg, method, method == Method::closed ? recursive_table : table, row)) {
        report_mismatch(err, *mismatch);
        return kExitMismatch;
      }
      table.append_row(std::move(row));
    }
    if (cached >= g) {
      err << "cache: genus " << g << " served from " << cache_path << '\n';
    } else {
      store_cache(cache_path, table, err);
      err << "cache: computed genera " << cached + 1 << ".." << g << ", wrote " << cache_path << '\n';
    }
    const auto row = table.row(g);
    correlators.assign(row.begin(), row.end());
  }

  std::vector<Row> rows;
  rows.reserve(correlators.size());
  for (long k = 0; k < row_size(g); ++k) rows.push_back({k, correlators[k], normalize(g, k, correlators[k])});
  err << "time: " << Millis(Clock::now() - start).count() << " ms\n";
  emit_rows(out, format, g, rows);
  return kExitOk;
}

std::vector<std::string> split_checks(const std::string& list) {
  std::vector<std::string> names;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (!name.empty()) names.push_back(name);
  }
  return names;
}

int cmd_verify(long g_max, const std::string& checks, Format format, std::ostream& out, std::ostream& err) {
  if (g_max < 1) {
    err << "error: g-max must be >= 1, got " << g_max << '\n';
    return kExitUsage;
  }
  const auto names = checks.empty() ? default_checks() : split_checks(checks);
  for (const auto& name : names) {
    if (std::find(known_checks().begin(), known_checks().end(), name) == known_checks().end()) {
      err << "error: unknown check '" << name << "'\n";
      return kExitUsage;
    }
  }

  bool all_passed = true;
  nlohmann::json reports = nlohmann::json::array();
  std::vector<CheckReport> results;
  for (const auto& name : names) {
    results.push_back(run_check(name, g_max));
    all_passed = all_passed && results.back().passed();
  }

  switch (format) {
    case Format::json:
      for (const auto& r : results) reports.push_back(to_json(r));
      out << nlohmann::json{{"g_max", g_max}, {"passed", all_passed}, {"checks", std::move(reports)}}.dump() << '\n';
      break;
    case Format::csv:
      out << "check,g_max,passed,checked,failures\n";
      for (const auto& r : results) {
        out << r.check_name << ',' << r.g_max << ',' << (r.passed() ? "true" : "false") << ',' << r.checked << ','
            << r.failures.size() << '\n';
      }
      break;
    case Format::plain:
      for (const auto& r : results) {
        out << (r.passed() ? "PASS " : "FAIL ") << r.check_name << " g_max=" << r.g_max << " checked=" << r.checked
            << " failures=" << r.failures.size() << '\n';
        for (const auto& f : r.failures) {
          out << "  (g=" << f.g << ", k=" << f.k << ") expected " << to_string(f.expected) << ", actual "
              << to_string(f.actual) << '\n';
        }
      }
      break;
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(long g_max, Method method, std::ostream& out, std::ostream& err) {
  if (g_max < 1) {
    err << "error: g-max must be >= 1, got " << g_max << '\n';
    return kExitUsage;
  }
  const auto rows = run_bench(g_max, method);
  out << "g";
  if (method != Method::recursive) out << "\tclosed_ms";
  if (method != Method::closed) out << "\trecursive_cumulative_ms";
  out << "\tpeak_bits\tscale_bits\n";
  for (const auto& r : rows) {
    out << r.g;
    if (r.closed) out << '\t' << r.closed->count();
    if (r.recursive) out << '\t' << r.recursive->count();
    out << '\t' << r.peak_bits << '\t' << r.scale_bits << '\n';
  }
  return kExitOk;
}

}  // namespace

std::vector<BenchRow> run_bench(long g_max, Method method) {
  std::vector<BenchRow> rows;
  TwoPointTable table;
  Millis recursive_total{0};
  for (long g = 1; g <= g_max; ++g) {
    BenchRow row{g, std::nullopt, std::nullopt, 0, 0};
    std::vector<ExactRational> values;
    if (method != Method::recursive) {
      const auto start = Clock::now();
      values = two_point_closed_row(g);
      row.closed = Clock::now() - start;
    }
    if (method != Method::closed) {
      const auto start = Clock::now();
      extend_table(table, g);
      recursive_total += Clock::now() - start;
      row.recursive = recursive_total;
      const auto r = table.row(g);
      values.assign(r.begin(), r.end());
    }
    for (const auto& v : values) row.peak_bits = std::max(row.peak_bits, bit_size(v));
    const ExactInteger scale = ExactInteger(one_point(g).get_den()) * double_factorial_odd(6 * g - 1);
    row.scale_bits = mpz_sizeinbase(scale.get_mpz_t(), 2);
    rows.push_back(row);
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact two-point correlators <tau_k tau_{3g-1-k}> of 2D topological gravity", "tau2"};
  app.require_subcommand(1);

  long g = 0;
  long k = 0;
  long g_max = 0;
  Method value_method = Method::both;
  Method table_method = Method::closed;
  Method bench_method = Method::both;
  Format format = Format::plain;
  std::string checks;
  std::string cache;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "plain|csv|json")->transform(CLI::CheckedTransformer(kFormats));
  };

  auto* value = app.add_subcommand("value", "One correlator and its normalized value");
  value->add_option("--g", g, "genus")->required();
  value->add_option("--k", k, "first tau index, 0..3g-1")->required();
  value->add_option("--method", value_method, "closed|recursive|both")->transform(CLI::CheckedTransformer(kMethods));
  add_format(value);

  auto* table = app.add_subcommand("table", "All correlators of one genus");
  table->add_option("--g", g, "genus")->required();
  table->add_option("--method", table_method, "closed|recursive|both")->transform(CLI::CheckedTransformer(kMethods));
  table->add_option("--cache", cache, "table cache file");
  add_format(table);

  auto* verify = app.add_subcommand("verify", "Run the cross-validation checks");
  verify->add_option("--g-max", g_max, "largest genus checked")->required();
  verify->add_option("--checks", checks, "comma list of checks");
  add_format(verify);

  auto* bench = app.add_subcommand("bench", "Time the closed and recursive paths per genus");
  bench->add_option("--g-max", g_max, "largest genus timed")->required();
  bench->add_option("--method", bench_method, "closed|recursive|both")->transform(CLI::CheckedTransformer(kMethods));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (value->parsed()) return cmd_value(g, k, value_method, format, out, err);
    if (table->parsed()) return cmd_table(g, table_method, format, cache, out, err);
    if (verify->parsed()) return cmd_verify(g_max, checks, format, out, err);
    return cmd_bench(g_max, bench_method, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace tau2::cli
