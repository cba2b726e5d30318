#include "tau2/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tau2::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("tau2-cli-test-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

TEST(ValueCommandTest, DefaultBothPaths) {
  const auto r = run_cli({"value", "--g", "2", "--k", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "29/5760\n29/33\n");
  EXPECT_TRUE(r.err.empty());

  EXPECT_EQ(lines(run_cli({"value", "--g", "1", "--k", "1"}).out).at(0), "1/24");
}

TEST(ValueCommandTest, EachMethodAndFormat) {
  for (const char* method : {"closed", "recursive", "both"}) {
    EXPECT_EQ(lines(run_cli({"value", "--g", "3", "--k", "4", "--method", method}).out).at(0),
              lines(run_cli({"value", "--g", "3", "--k", "4"}).out).at(0));
  }
  const auto csv = run_cli({"value", "--g", "2", "--k", "2", "--format", "csv"});
  EXPECT_EQ(csv.out, "g,k,correlator,normalized\n2,2,29/5760,29/33\n");
  const auto json = nlohmann::json::parse(run_cli({"value", "--g", "2", "--k", "2", "--format", "json"}).out);
  EXPECT_EQ(json.at("correlator"), "29/5760");
  EXPECT_EQ(json.at("normalized"), "29/33");
  EXPECT_EQ(json.at("method"), "both");
}

TEST(ValueCommandTest, RangeErrors) {
  const auto r = run_cli({"value", "--g", "2", "--k", "7"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("k must be in 0..5"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run_cli({"value", "--g", "0", "--k", "0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"value", "--g", "2"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"value", "--g", "2", "--k", "1", "--method", "magic"}).code, kExitUsage);
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(TableCommandTest, Csv) {
  const auto r = run_cli({"table", "--g", "2", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0], "g,k,correlator,normalized");
  EXPECT_EQ(rows[1], "2,0,1/1152,1");
  EXPECT_EQ(rows[3], "2,2,29/5760,29/33");
  EXPECT_EQ(lines(run_cli({"table", "--g", "3", "--format", "csv"}).out).at(1), "3,0,1/82944,1");
}

TEST(TableCommandTest, JsonGenusOne) {
  const auto json = nlohmann::json::parse(run_cli({"table", "--g", "1", "--format", "json"}).out);
  EXPECT_EQ(json.at("g"), 1);
  std::vector<std::string> values;
  for (const auto& row : json.at("rows")) values.push_back(row.at("correlator"));
  EXPECT_EQ(values, (std::vector<std::string>{"1/24", "1/24", "1/24"}));
}

TEST(TableCommandTest, CsvAndJsonAgree) {
  for (const char* method : {"closed", "recursive", "both"}) {
    const auto csv = lines(run_cli({"table", "--g", "7", "--format", "csv", "--method", method}).out);
    const auto json = nlohmann::json::parse(run_cli({"table", "--g", "7", "--format", "json"}).out);
    ASSERT_EQ(csv.size() - 1, json.at("rows").size());
    for (std::size_t i = 0; i < json.at("rows").size(); ++i) {
      const auto& row = json.at("rows")[i];
      EXPECT_EQ(csv[i + 1], "7," + std::to_string(row.at("k").get<long>()) + "," +
                                row.at("correlator").get<std::string>() + "," +
                                row.at("normalized").get<std::string>());
    }
  }
}

TEST(TableCommandTest, RejectsBadGenus) { EXPECT_EQ(run_cli({"table", "--g", "0"}).code, kExitUsage); }

TEST(TableCommandTest, CacheReuseIsByteIdentical) {
  TempDir dir;
  const std::string cache = (dir / "table.txt").string();
  const auto first = run_cli({"table", "--g", "6", "--method", "recursive", "--format", "csv", "--cache", cache});
  ASSERT_EQ(first.code, kExitOk);
  EXPECT_NE(first.err.find("computed genera 1..6"), std::string::npos);
  const auto second = run_cli({"table", "--g", "6", "--method", "recursive", "--format", "csv", "--cache", cache});
  EXPECT_EQ(second.out, first.out);
  EXPECT_NE(second.err.find("served from"), std::string::npos);

  // A lower genus is served from the same file; a higher one extends it.
  EXPECT_NE(run_cli({"table", "--g", "4", "--cache", cache}).err.find("served from"), std::string::npos);
  const auto extended = run_cli({"table", "--g", "8", "--method", "both", "--cache", cache});
  EXPECT_NE(extended.err.find("computed genera 7..8"), std::string::npos);
  EXPECT_EQ(extended.out, run_cli({"table", "--g", "8"}).out);
}

TEST(TableCommandTest, CorruptCacheIsRecomputed) {
  TempDir dir;
  const auto cache = dir / "table.txt";
  ASSERT_EQ(run_cli({"table", "--g", "3", "--cache", cache.string()}).code, kExitOk);

  std::stringstream text;
  text << std::ifstream(cache).rdbuf();
  std::string content = text.str();
  const std::string needle = "2\t2\t29/5760";
  content.replace(content.find(needle), needle.size(), "2\t2\t29/5761");
  std::ofstream(cache, std::ios::trunc) << content;

  const auto r = run_cli({"table", "--g", "3", "--cache", cache.string(), "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("warning: discarding cache"), std::string::npos);
  EXPECT_EQ(r.out, run_cli({"table", "--g", "3", "--format", "csv"}).out);
  EXPECT_NE(run_cli({"table", "--g", "3", "--cache", cache.string()}).err.find("served from"), std::string::npos);
}

TEST(VerifyCommandTest, AllChecks) {
  const auto r = run_cli({"verify", "--g-max", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out).size(), 6u);
  for (const auto& line : lines(r.out)) EXPECT_EQ(line.rfind("PASS ", 0), 0u) << line;
}

TEST(VerifyCommandTest, SelectedChecksAndJson) {
  const auto r = run_cli({"verify", "--g-max", "2", "--checks", "bounds", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto json = nlohmann::json::parse(r.out);
  EXPECT_EQ(json.at("passed"), true);
  ASSERT_EQ(json.at("checks").size(), 1u);
  EXPECT_EQ(json.at("checks")[0].at("check"), "bounds");
  EXPECT_EQ(json.at("checks")[0].at("checked"), 2);
  EXPECT_TRUE(json.at("checks")[0].at("failures").empty());
}

TEST(VerifyCommandTest, UsageErrors) {
  EXPECT_EQ(run_cli({"verify", "--g-max", "0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--g-max", "3", "--checks", "cross,bogus"}).code, kExitUsage);
}

TEST(BenchCommandTest, Columns) {
  const auto both = lines(run_cli({"bench", "--g-max", "10", "--method", "both"}).out);
  ASSERT_EQ(both.size(), 11u);
  EXPECT_EQ(both[0], "g\tclosed_ms\trecursive_cumulative_ms\tpeak_bits\tscale_bits");

  const auto single = lines(run_cli({"bench", "--g-max", "1"}).out);
  EXPECT_EQ(single.size(), 2u);

  const auto closed = lines(run_cli({"bench", "--g-max", "3", "--method", "closed"}).out);
  EXPECT_EQ(closed[0], "g\tclosed_ms\tpeak_bits\tscale_bits");
  EXPECT_EQ(run_cli({"bench", "--g-max", "0"}).code, kExitUsage);
}

TEST(BenchTest, ScaleBitsNondecreasing) {
  const auto rows = run_bench(100, Method::closed);
  ASSERT_EQ(rows.size(), 100u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GE(rows[i].scale_bits, rows[i - 1].scale_bits) << "g=" << rows[i].g;
    EXPECT_GT(rows[i].peak_bits, 0u);
    EXPECT_TRUE(rows[i].closed.has_value());
    EXPECT_FALSE(rows[i].recursive.has_value());
  }
}

}  // namespace
}  // namespace tau2::cli
