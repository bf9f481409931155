#pragma once

// Machine-checkable identity suite behind the `verify` subcommand. Each check
// evaluates one structural identity (or one piece of plumbing) over seeded
// trials and reports its worst absolute and relative error. The registry is
// fixed; docs/checks.md mirrors it and is tested against it by enumeration.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgeom::verify {

enum class Suite { kahler, reduction, unfolding, crosscheck, all };
enum class Format { json, csv };
enum class ErrorMode { relative, absolute };

Suite suite_from_string(const std::string& name);
std::string to_string(Suite suite);
std::string to_string(Format format);

struct RunConfig {
  int dim = 2;
  int trials = 100;
  std::uint64_t seed = 1;
  double tol = 1e-10;
  Suite suite = Suite::all;
  std::string out_path;  // empty: do not write a file
  Format format = Format::json;
  bool include_timing = true;  // false pins wall_time_ms to 0 for byte-stable reports
};

struct CheckRecord {
  std::string check_id;
  std::string identity;
  int n_trials = 0;
  double max_abs_err = 0;
  double max_rel_err = 0;
  double tol = 0;  // tolerance the verdict used
  bool pass = false;
};

struct Report {
  RunConfig config;
  std::vector<CheckRecord> checks;
  double wall_time_ms = 0;
  std::string version;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Worst-error accumulator. Relative errors are scaled by
/// max(1, |lhs|, |rhs|); residuals against a zero target enter the relative
/// slot scaled by max(1, scale).
class ErrorAccumulator {
 public:
  void add_pair(double lhs, double rhs);
  void add_residual(double abs_err, double scale = 1.0);
  double max_abs() const { return max_abs_; }
  double max_rel() const { return max_rel_; }

 private:
  double max_abs_ = 0;
  double max_rel_ = 0;
};

struct CheckDefinition {
  std::string id;
  std::string identity;
  Suite suite;  // the single non-`all` suite the check belongs to
  ErrorMode mode = ErrorMode::relative;
  double fixed_tol = 0;  // > 0 overrides the configured tolerance
  // Runs the trials and returns the trial count.
  std::function<int(const RunConfig&, ErrorAccumulator&)> run;
};

/// All registered checks, in report order.
const std::vector<CheckDefinition>& check_registry();

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Validates the configuration, runs the selected suite, optionally writes
/// the report to config.out_path (atomically), and returns it.
Report run_suite(const RunConfig& config);

std::string report_to_json(const Report& report);
std::string report_to_csv(const Report& report);

}  // namespace qgeom::verify
