#ifndef KGROTH_VERIFY_HPP
#define KGROTH_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "kgroth/thom.hpp"

namespace kgroth {

// fast runs the cheap identity checks (ids 1-6, 9-11); full runs all 15.
enum class VerifySuite { fast, full };

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;  // empty on pass; first failure witness otherwise
};

// Test seams. d_table, when set, replaces the closed-form d values inside
// check 5, so a corrupted table exercises the failure path end to end.
struct VerifyOptions {
  const CoeffTable* d_table = nullptr;
};

// Runs the suite's checks in id order. A check failure (or an exception
// escaping a check) is reported in its CheckResult, never thrown. on_result,
// when given, is called with each result as soon as its check finishes.
std::vector<CheckResult> run_verification(
    VerifySuite suite, const VerifyOptions& options = {},
    const std::function<void(const CheckResult&)>& on_result = {});

bool all_passed(const std::vector<CheckResult>& results);

// "check NN PASS (0.01s) name" with the detail appended on failure.
std::string format_check_line(const CheckResult& r);

}  // namespace kgroth

#endif
