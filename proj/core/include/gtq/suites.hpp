#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtq/factored.hpp"
#include "gtq/half_int.hpp"
#include "gtq/mode.hpp"

namespace gtq {

struct SuiteOptions {
  std::uint64_t seed = 0;
  double tol = 1e-9;             // numeric suites only
  bool allow_over_bound = false;  // run past the default bound, with a warning
};

struct CheckResult {
  std::string suite;
  int n = 0;
  std::string id;
  bool pass = true;
  std::optional<std::string> witness;
  std::size_t n_terms = 0;
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  int n = 0;
  Mode mode = Mode::quantum;
  SuiteOptions options;
  std::vector<CheckResult> checks;
  SumStats kernel;
  std::vector<std::string> warnings;
  double seconds = 0;

  bool passed() const;
  std::size_t failures() const;
  // Schema 1; wall times only when asked, so default output is reproducible byte for byte.
  std::string to_json(bool timings = false) const;
};

class UnknownSuite : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};
class BoundExceeded : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<std::string> &suite_names();  // "all" last
int suite_bound(const std::string &suite, Mode mode);

SuiteReport run_suite(const std::string &suite, int n, Mode mode, const SuiteOptions &options = {});

// Valid top rows of level n with |entry| <= max_abs, integer and half-integer, in lexicographic order.
std::vector<std::vector<HalfInt>> top_rows_up_to(int n, HalfInt max_abs);

}  // namespace gtq
