// Contract tests for the conglab command line: pinned headers, row counts,
// determinism, exit codes, and CSV/JSON numeric agreement. The binary path
// comes from the build system; every invocation runs in a scratch
// directory with an isolated cache.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string scratch_dir() {
  static std::string dir = [] {
    char tmpl[] = "/tmp/conglab_cli_XXXXXX";
    char* d = mkdtemp(tmpl);
    REQUIRE(d != nullptr);
    return std::string(d);
  }();
  return dir;
}

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = "cd " + scratch_dir() + " && " + env + " " + CONGLAB_BIN_PATH + " " + args +
                    " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  for (auto& l : lines_of(text))
    if (!l.empty() && l[0] != '#') out.push_back(l);
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("classes: pinned csv header, row count, cache determinism") {
  std::remove((scratch_dir() + "/mu0_cache.csv").c_str());
  RunResult cold = run("classes --range 3..10 --format csv");
  REQUIRE(cold.exit_code == 0);
  auto rows = data_lines(cold.out);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0] == "trace,mu0,discriminant,n_cycles");
  CHECK(rows[1] == "3,1,5,1");

  RunResult warm = run("classes --range 3..10 --format csv");
  CHECK(warm.exit_code == 0);
  CHECK(warm.out == cold.out);  // byte-identical rerun with a warm cache
}

TEST_CASE("classes: single trace with representative") {
  RunResult r = run("classes --trace 3 --format json");
  REQUIRE(r.exit_code == 0);
  auto rows = data_lines(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].find("\"trace\":3") != std::string::npos);
  CHECK(rows[0].find("\"mu0\":1") != std::string::npos);
  CHECK(rows[0].find("\"mu0_sl2\":2") != std::string::npos);
  // the representative [1,-1,-1,2] has trace 3
  CHECK(rows[0].find("\"representatives\":[[1,-1,-1,2]]") != std::string::npos);

  CHECK(run("classes --trace 2").exit_code == 2);
  CHECK(run("classes").exit_code == 2);
  CHECK(run("classes --trace 3 --no-such-flag 1").exit_code == 2);
}

TEST_CASE("classes: corrupted cache is rebuilt, not trusted") {
  const std::string cache = scratch_dir() + "/corrupt.csv";
  FILE* f = fopen(cache.c_str(), "w");
  REQUIRE(f != nullptr);
  fputs("trace;mu0\ngarbage\n", f);
  fclose(f);
  RunResult r = run("classes --range 3..5 --cache corrupt.csv");
  REQUIRE(r.exit_code == 0);
  auto rows = data_lines(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1] == "3,1,5,1");
  // the cache file was rewritten under the correct header
  RunResult again = run("classes --range 3..5 --cache corrupt.csv");
  CHECK(again.out == r.out);
}

TEST_CASE("env var overrides the cache flag") {
  const std::string env_cache = scratch_dir() + "/env_cache.csv";
  std::remove(env_cache.c_str());
  RunResult r = run("classes --range 3..4 --cache ignored.csv",
                    "CONGRUENCE_LAB_CACHE=" + env_cache);
  REQUIRE(r.exit_code == 0);
  FILE* f = fopen(env_cache.c_str(), "r");
  CHECK(f != nullptr);
  if (f) fclose(f);
}

TEST_CASE("bounds: pinned header, verdicts, and csv/json numeric agreement") {
  RunResult csv = run("bounds --n 5..20 --epsilon 0.5 --format csv");
  REQUIRE(csv.exit_code == 0);
  auto rows = data_lines(csv.out);
  REQUIRE(rows.size() == 17);
  CHECK(rows[0] == "N,setting,mu0,index,area,sys_lower,kiss_lower,epsilon,verdict_kiss,verdict_sys");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto f = split_csv(rows[i]);
    REQUIRE(f.size() == 10);
    CHECK(f[1] == "modular");
    CHECK(f[9] == "true");  // verdict_sys across the whole range
  }

  RunResult json = run("bounds --n 5..20 --epsilon 0.5 --format json");
  REQUIRE(json.exit_code == 0);
  auto jrows = data_lines(json.out);
  REQUIRE(jrows.size() == 16);
  for (std::size_t i = 0; i < jrows.size(); ++i) {
    auto f = split_csv(rows[i + 1]);
    // identical numeric tokens must appear in the JSON mirror
    CHECK(jrows[i].find("\"N\":" + f[0]) != std::string::npos);
    CHECK(jrows[i].find("\"mu0\":" + f[2]) != std::string::npos);
    CHECK(jrows[i].find("\"index\":" + f[3]) != std::string::npos);
    CHECK(jrows[i].find("\"area\":" + f[4]) != std::string::npos);
    CHECK(jrows[i].find("\"sys_lower\":" + f[5]) != std::string::npos);
    CHECK(jrows[i].find("\"kiss_lower\":" + f[6]) != std::string::npos);
  }

  CHECK(run("bounds --n 4 --epsilon 0.5").exit_code == 2);
  CHECK(run("bounds --n 5 --epsilon 2.0").exit_code == 2);
}

TEST_CASE("isotropy: split witness and division places") {
  RunResult split = run("isotropy --a 1 --b 1");
  REQUIRE(split.exit_code == 0);
  CHECK(data_lines(split.out)[0] ==
        "{\"a\":\"1\",\"b\":\"1\",\"verdict\":\"split\",\"witness\":[\"1\",\"1\",\"0\",\"0\"]}");

  RunResult division = run("isotropy --a 3 --b -1");
  REQUIRE(division.exit_code == 0);
  CHECK(data_lines(division.out)[0] ==
        "{\"a\":\"3\",\"b\":\"-1\",\"verdict\":\"division\",\"ramified\":[\"2\",\"3\"]}");

  RunResult rational = run("isotropy --a 2/9 --b 7/4");
  REQUIRE(rational.exit_code == 0);
  CHECK(rational.out.find("\"verdict\":\"split\"") != std::string::npos);

  CHECK(run("isotropy --a xyz --b 1").exit_code == 2);
  CHECK(run("isotropy --a 0 --b 1").exit_code == 2);
  CHECK(run("isotropy --a 1/0 --b 1").exit_code == 2);
}

TEST_CASE("enumerate: sorted stream, norm checks, level filter") {
  RunResult r = run("enumerate --p 3 --height 2");
  REQUIRE(r.exit_code == 0);
  auto rows = data_lines(r.out);
  CHECK(rows.size() == 20);
  bool found = false;
  for (auto& line : rows)
    if (line.find("\"coords\":[2,0,0,1]") != std::string::npos &&
        line.find("\"trace\":4") != std::string::npos &&
        line.find("\"kind\":\"hyperbolic\"") != std::string::npos)
      found = true;
  CHECK(found);

  // level filter keeps only congruence members (x0 = 1 mod 3, rest = 0 mod 3)
  RunResult filtered = run("enumerate --p 3 --height 12 --level 3");
  REQUIRE(filtered.exit_code == 0);
  for (auto& line : data_lines(filtered.out)) {
    CHECK(line.find("\"N\":3") != std::string::npos);
    CHECK(line.find("\"setting\":\"quaternionic\"") != std::string::npos);
  }

  CHECK(run("enumerate --p 5 --height 2").exit_code == 2);
}

TEST_CASE("enumerate stream is sorted by coordinates") {
  RunResult r = run("enumerate --p 7 --height 3");
  REQUIRE(r.exit_code == 0);
  std::vector<std::array<long, 4>> coords;
  for (auto& line : data_lines(r.out)) {
    auto pos = line.find("\"coords\":[");
    REQUIRE(pos != std::string::npos);
    std::array<long, 4> c{};
    REQUIRE(std::sscanf(line.c_str() + pos, "\"coords\":[%ld,%ld,%ld,%ld]", &c[0], &c[1], &c[2],
                        &c[3]) == 4);
    coords.push_back(c);
  }
  CHECK(std::is_sorted(coords.begin(), coords.end()));
}

TEST_CASE("verify: suites pass and exit codes follow the contract") {
  RunResult order = run("verify --suite order-formula --n 2..8");
  CHECK(order.exit_code == 0);
  CHECK(order.out.find("verify order-formula: PASS") != std::string::npos);

  RunResult quat = run("verify --suite quat-gap --p 3 --n 3,5,7 --height 40");
  CHECK(quat.exit_code == 0);
  CHECK(quat.out.find("verify quat-gap: PASS") != std::string::npos);
  CHECK(quat.out.find("derived") != std::string::npos);  // flagged derived bound

  RunResult lemma = run("verify --suite lemma-sn --n 5..6 --height 300");
  CHECK(lemma.exit_code == 0);
  CHECK(lemma.out.find("verify lemma-sn: PASS") != std::string::npos);

  RunResult rec = run("verify --suite hilbert-reciprocity --count 10 --seed 7");
  CHECK(rec.exit_code == 0);

  CHECK(run("verify --suite no-such-suite").exit_code == 2);
  CHECK(run("verify").exit_code == 2);
}

TEST_CASE("pgt: row count, monotone cumulative column, classes agreement") {
  RunResult r = run("pgt --tmax 200");
  REQUIRE(r.exit_code == 0);
  auto rows = data_lines(r.out);
  REQUIRE(rows.size() == 199);
  CHECK(rows[0] == "t,mu0,cumulative,reference,ratio");
  long long prev_cum = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto f = split_csv(rows[i]);
    REQUIRE(f.size() == 5);
    long long cum = std::stoll(f[2]);
    CHECK(cum >= prev_cum);
    prev_cum = cum;
    double ratio = std::stod(f[4]);
    CHECK(ratio > 0.0);
  }

  // cross-command agreement with the classes table
  RunResult cls = run("classes --range 3..20 --format csv");
  auto crow = data_lines(cls.out);
  for (std::size_t i = 1; i < crow.size(); ++i) {
    auto cf = split_csv(crow[i]);
    auto pf = split_csv(rows[i]);
    CHECK(cf[0] == pf[0]);  // trace
    CHECK(cf[1] == pf[1]);  // mu0
  }

  CHECK(run("pgt --tmax 9").exit_code == 2);
}
