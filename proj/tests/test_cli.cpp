#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "gaussjacobi/cli.hpp"

using namespace gaussjacobi;
using namespace gaussjacobi::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream o, e;
  const int c = run_cli(args, o, e);
  return {c, o.str(), e.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

std::vector<double> numbers(const std::string& s) {
  std::vector<double> v;
  std::istringstream is(s);
  for (std::string tok; is >> tok;) v.push_back(std::strtod(tok.c_str(), nullptr));
  return v;
}

}  // namespace

TEST_CASE("compute, Chebyshev text") {
  const Run r = run({"compute", "--n", "4", "--alpha", "-0.5", "--beta", "-0.5", "--format", "text"});
  CHECK(r.code == kOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  for (const auto& l : ls) {
    const auto v = numbers(l);
    REQUIRE(v.size() == 2);
    CHECK(std::abs(v[1] - 0.7853981633974483) <= 4e-16);
  }
}

TEST_CASE("compute, json") {
  const Run r = run({"compute", "--n", "1", "--alpha", "0", "--beta", "2", "--format", "json"});
  CHECK(r.code == kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 1);
  CHECK(j["nodes"][0].get<double>() == 0.5);
  CHECK(j["weights"][0].get<double>() == 2.6666666666666665);
  for (const char* key : {"alpha", "beta", "method", "scheme", "stats", "flushed_underflow_count"})
    CHECK(j.contains(key));
  for (const char* key : {"mean_iters", "max_iters", "mean_terms", "max_terms"}) CHECK(j["stats"].contains(key));
}

TEST_CASE("compute, csv to a file") {
  const auto path = std::filesystem::temp_directory_path() / "gj_cli_test.csv";
  const Run r = run({"compute", "--n", "3", "--format", "csv", "--out", path.string()});
  CHECK(r.code == kOk);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "x,w");
  int rows = 0;
  for (std::string l; std::getline(f, l);) ++rows;
  CHECK(rows == 3);
  std::filesystem::remove(path);
}

TEST_CASE("output round-trips binary64") {
  for (double v : {0.1, 1.0 / 3, 5e-324, -0.7853981633974483, 1e300}) {
    CHECK(std::strtod(format_real(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("compare") {
  const Run a = run({"compare", "--n", "20", "--alpha", "1", "--beta", "1"});
  CHECK(a.code == kOk);
  for (double v : numbers(a.out)) CHECK(v <= 1e-12);
  CHECK(numbers(a.out).size() == 3);

  const Run b = run({"compare", "--n", "4", "--alpha", "-0.5", "--beta", "-0.5"});
  for (double v : numbers(b.out)) CHECK(v <= 1e-14);

  const Run c = run({"compare", "--n", "90", "--alpha", "-0.99", "--beta", "2"});
  CHECK(c.code == kOk);
  CHECK(numbers(c.out).at(2) <= 1e-11);
}

TEST_CASE("stats") {
  auto value = [](const std::string& out, const std::string& key) {
    for (const auto& l : lines(out))
      if (l.rfind(key + " ", 0) == 0) return std::strtod(l.c_str() + key.size() + 1, nullptr);
    FAIL("missing key " << key);
    return 0.0;
  };
  const Run a = run({"stats", "--n", "1000", "--alpha", "-0.8", "--beta", "-0.8"});
  CHECK(a.code == kOk);
  CHECK(value(a.out, "mean_iters") <= 3.5);
  CHECK(value(a.out, "mean_terms") <= 120);

  const Run b = run({"stats", "--n", "10", "--alpha", "-0.8", "--beta", "-0.8"});
  CHECK(value(b.out, "mean_iters") <= 4.5);
  CHECK(value(b.out, "mean_terms") <= 500);

  const Run c = run({"stats", "--n", "1", "--alpha", "0.4", "--beta", "3"});
  CHECK(value(c.out, "max_iters") <= 1);
}

TEST_CASE("check") {
  const Run a = run({"check", "--n", "10"});
  CHECK(a.code == kOk);
  CHECK(numbers(lines(a.out).at(0).substr(7)).at(0) <= 1e-12);

  const Run b = run({"check", "--n", "30", "--alpha", "-0.9", "--beta", "4"});
  CHECK(b.code == kOk);
  CHECK(numbers(lines(b.out).at(0).substr(7)).at(0) <= 1e-11);

  const Run c = run({"check", "--n", "3", "--alpha", "-0.5", "--beta", "-0.5"});
  CHECK(c.code == kOk);
  CHECK(numbers(lines(c.out).at(0).substr(7)).at(0) <= 1e-14);

  const Run d = run({"check", "--n", "10", "--tol", "1e-300"});
  CHECK(d.code == kCheckFailed);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kUsage);
  CHECK(run({"compute"}).code == kUsage);
  CHECK(run({"compute", "--n", "4", "--alpha", "-1"}).code == kUsage);
  CHECK(run({"compute", "--n", "4", "--format", "xml"}).code == kUsage);
  CHECK(run({"frobnicate", "--n", "4"}).code == kUsage);
  CHECK(run({"compare", "--n", "20000"}).code == kUsage);
  const Run r = run({"compute", "--n", "4", "--beta", "-3"});
  CHECK(r.code == kUsage);
  CHECK(r.err.find("ParameterOutOfRange") != std::string::npos);
}

TEST_CASE("gw method for compute") {
  const Run r = run({"compute", "--n", "2", "--method", "gw"});
  CHECK(r.code == kOk);
  const auto v = numbers(r.out);
  REQUIRE(v.size() == 4);
  CHECK(std::abs(v[0] + 1 / std::sqrt(3.0)) <= 4e-16);
  CHECK(std::abs(v[1] - 1) <= 4e-16);
}

TEST_CASE("installed executable") {
  const char* exe = std::getenv("GJQUAD");
  if (!exe) {
    MESSAGE("GJQUAD not set; skipped");
    return;
  }
  const std::string cmd = std::string("\"") + exe + "\" compute --n 4 --alpha -0.5 --beta -0.5";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  char buf[256];
  while (std::fgets(buf, sizeof buf, f)) out += buf;
  CHECK(pclose(f) == 0);
  CHECK(lines(out).size() == 4);

  const std::string bad = std::string("\"") + exe + "\" compute --n 0 2>/dev/null";
  FILE* g = popen(bad.c_str(), "r");
  REQUIRE(g != nullptr);
  while (std::fgets(buf, sizeof buf, g)) {
  }
  const int st = pclose(g);
  CHECK(WEXITSTATUS(st) == 1);
}
