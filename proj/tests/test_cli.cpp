#include "kgroth/cli.hpp"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "kgroth/grothendieck.hpp"
#include "kgroth/thom.hpp"
#include "kgroth/verify.hpp"

using namespace kgroth;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun result;
  result.code = run_cli(args, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("groth command renders permutations and partitions") {
  CliRun full = run({"groth", "--perm", "132"});
  CHECK(full.code == 0);
  CHECK(full.out == "1 - b1*b2*a1^-1*a2^-1\n");
  CHECK(full.err.empty());

  CliRun truncated = run({"groth", "--perm", "21", "--k", "1", "--l", "0"});
  CHECK(truncated.code == 0);
  CHECK(truncated.out == "1 - a1^-1\n");

  CliRun hook = run({"groth", "--partition", "1", "--k", "1", "--l", "1"});
  CHECK(hook.code == 0);
  CHECK(hook.out == "1 - b1*a1^-1\n");

  CliRun boxed = run({"groth", "--partition", "2,1", "--k", "2", "--l", "2"});
  CHECK(boxed.code == 0);
  CHECK(boxed.out == g_residue({2, 1}, 2, 2).to_string() + "\n");
}

TEST_CASE("groth usage errors") {
  CHECK(run({"groth"}).code == 2);
  CHECK(run({"groth", "--perm", "132", "--partition", "1"}).code == 2);
  CHECK(run({"groth", "--partition", "1"}).code == 2);
  CHECK(run({"groth", "--perm", "132", "--k", "2"}).code == 2);
  CHECK(run({"groth", "--partition", "1,2", "--k", "1", "--l", "1"}).code == 2);
  CHECK(run({"groth", "--perm", "1x2"}).code == 2);
  CliRun bad = run({"groth", "--partition", "2,,1", "--k", "1", "--l", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("usage error") != std::string::npos);
}

TEST_CASE("straighten command") {
  CliRun r = run({"straighten", "--seq", "0,2"});
  CHECK(r.code == 0);
  CHECK(r.out == straighten({0, 2}).to_text() + "\n");
  CHECK(run({"straighten"}).code == 2);
}

TEST_CASE("product command reproduces the worked example") {
  CliRun r = run({"product", "--left", "2", "--right", "2", "--k", "3", "--l", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == multiply_G({2}, {2}, 3, 0, 2, 4).to_text() + "\n");
}

TEST_CASE("ktp commands") {
  CliRun residue = run({"ktp", "a2", "--a", "1", "--b", "1"});
  CHECK(residue.code == 0);
  CHECK(residue.out == ktp_a2(ThomInstance(1, 1)).to_string() + "\n");

  CliRun minimal =
      run({"ktp", "a2", "--a", "1", "--b", "1", "--expand", "minimal", "--format", "json"});
  CHECK(minimal.code == 0);
  CHECK(minimal.out == ktp_a2_minimal(0).to_json() + "\n");

  CliRun stable = run({"ktp", "a2", "--a", "1", "--b", "1", "--expand", "stable", "--N", "3"});
  CHECK(stable.code == 0);
  CHECK(stable.out == ktp_a2_stable(0, 3).to_text() + "\n");

  CliRun sigma = run({"ktp", "sigma", "--r", "1", "--a", "1", "--b", "1"});
  CHECK(sigma.code == 0);
  CHECK(sigma.out == "1 - e1*b1^-1\n");

  CliRun a3 = run({"ktp", "a3", "--a", "2", "--b", "2"});
  CHECK(a3.code == 0);
  CHECK(a3.out == ktp_a3(ThomInstance(2, 2)).to_string() + "\n");

  CHECK(run({"ktp", "a2", "--a", "1", "--b", "1", "--expand", "stable"}).code == 2);
  CHECK(run({"ktp", "a2", "--a", "1", "--b", "1", "--N", "3"}).code == 2);
  CHECK(run({"ktp", "a3", "--a", "2", "--b", "2", "--expand", "minimal"}).code == 2);

  CliRun bad = run({"ktp", "a2", "--a", "3", "--b", "2"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("malformed-input") != std::string::npos);
}

TEST_CASE("coeff tables") {
  CoeffTable d_expected(2);
  for (int r = 0; r <= 4; ++r) {
    for (int s = -r - 1; s <= -1; ++s) d_expected.set({r, s}, Rational(d_coeff(r, s)));
  }
  CliRun d = run({"coeff", "d", "--rmax", "4"});
  CHECK(d.code == 0);
  CHECK(d.out == d_expected.to_text());
  CHECK(d.out.find("-12") != std::string::npos);

  CoeffTable dd_expected(2);
  for (int r = 0; r <= 2; ++r) {
    for (int s = -2; s <= -((r + 1) / 2); ++s) dd_expected.set({r, s}, Rational(D_coeff(r, s, 0)));
  }
  CliRun dd = run({"coeff", "D", "--l", "0", "--rmax", "2"});
  CHECK(dd.code == 0);
  CHECK(dd.out == dd_expected.to_text());

  CliRun d3 = run({"coeff", "d3", "--rmax", "0"});
  CHECK(d3.code == 0);
  CHECK(d3.out == d3_table(0, -1, 0, -3, -2).to_text());

  CliRun latex = run({"coeff", "d", "--rmax", "1", "--format", "latex"});
  CHECK(latex.code == 0);
  CHECK(latex.out.find("\\begin{array}") != std::string::npos);

  CHECK(run({"coeff", "d"}).code == 2);
  CHECK(run({"coeff", "D", "--rmax", "2"}).code == 2);
}

TEST_CASE("laurent json and latex renderings") {
  CliRun json = run({"groth", "--perm", "132", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(json.out ==
        "[{\"monomial\":[],\"coeff\":\"1\"},"
        "{\"monomial\":[[\"b1\",1],[\"b2\",1],[\"a1\",-1],[\"a2\",-1]],\"coeff\":\"-1\"}]\n");

  CliRun latex = run({"groth", "--perm", "132", "--format", "latex"});
  CHECK(latex.code == 0);
  CHECK(latex.out == "1 - \\beta_{1} \\beta_{2} \\alpha_{1}^{-1} \\alpha_{2}^{-1}\n");
}

TEST_CASE("cache round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("kgroth_cache_test_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  REQUIRE(setenv("KGROTH_CACHE", dir.c_str(), 1) == 0);

  CliRun first = run({"groth", "--perm", "132"});
  CHECK(first.code == 0);
  CHECK(first.out == "1 - b1*b2*a1^-1*a2^-1\n");

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) files.push_back(entry.path());
  REQUIRE(files.size() == 1);
  CHECK(files[0].filename().string().rfind(std::string(kVersionTag) + "-", 0) == 0);

  // The replayed bytes equal the fresh ones.
  CliRun second = run({"groth", "--perm", "132"});
  CHECK(second.code == 0);
  CHECK(second.out == first.out);

  // The cache really is the source on a hit.
  {
    std::ofstream tamper(files[0], std::ios::binary | std::ios::trunc);
    tamper << "sentinel\n";
  }
  CliRun tampered = run({"groth", "--perm", "132"});
  CHECK(tampered.code == 0);
  CHECK(tampered.out == "sentinel\n");

  // A different format is a different request.
  CliRun json = run({"groth", "--perm", "132", "--format", "json"});
  CHECK(json.code == 0);
  std::size_t file_count = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    (void)entry;
    ++file_count;
  }
  CHECK(file_count == 2);

  REQUIRE(unsetenv("KGROTH_CACHE") == 0);
  CliRun uncached = run({"groth", "--perm", "132"});
  CHECK(uncached.out == "1 - b1*b2*a1^-1*a2^-1\n");
  fs::remove_all(dir);
}

TEST_CASE("verify reports a corrupted coefficient table") {
  CoeffTable bad(2);
  bad.set({0, -1}, Rational(2));
  VerifyOptions options;
  options.d_table = &bad;
  std::vector<CheckResult> results = run_verification(VerifySuite::fast, options);
  CHECK(!all_passed(results));
  bool found = false;
  for (const CheckResult& r : results) {
    if (r.id == 5) {
      found = true;
      CHECK(!r.pass);
      std::string line = format_check_line(r);
      CHECK(line.find("FAIL") != std::string::npos);
      CHECK(line.find("d coefficient grid") != std::string::npos);
    } else {
      CHECK(r.pass);
    }
  }
  CHECK(found);
}

TEST_CASE("verify fast suite passes through the cli") {
  CliRun r = run({"verify", "fast"});
  CHECK(r.code == 0);
  CHECK(count_of(r.out, " PASS ") == 9);
  CHECK(r.out.find("9/9 checks passed") != std::string::npos);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "slow"}).code == 2);
}

TEST_CASE("help and unknown commands") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CliRun help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("kgroth") != std::string::npos);
}
