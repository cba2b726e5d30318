#pragma once

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tau2::cli {

enum class Method { closed, recursive, both };
enum class Format { plain, csv, json };

// Stable process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

struct BenchRow {
  long g = 0;
  // Time to produce row g alone from the closed form.
  std::optional<std::chrono::duration<double, std::milli>> closed;
  // Cumulative time to build genera 1..g by recursion.
  std::optional<std::chrono::duration<double, std::milli>> recursive;
  // Largest bit_size() among the correlators of genus g. Not monotone in g:
  // reduction to lowest terms cancels a varying amount.
  std::size_t peak_bits = 0;
  // Bits of 24^g g! (6g-1)!!, the scale every genus-g value is built on.
  std::size_t scale_bits = 0;
};

std::vector<BenchRow> run_bench(long g_max, Method method);

/// Entry point behind the tau2 executable. args excludes the program name.
/// Data goes to out, diagnostics to err; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tau2::cli
