#include <chrono>
#include <sstream>

#include <json.hpp>

#include "qgeom/checks.hpp"
#include "qgeom/matrix_io.hpp"
#include "qgeom/version.hpp"

namespace qgeom::verify {

Suite suite_from_string(const std::string& name) {
  if (name == "kahler") return Suite::kahler;
  if (name == "reduction") return Suite::reduction;
  if (name == "unfolding") return Suite::unfolding;
  if (name == "crosscheck") return Suite::crosscheck;
  if (name == "all") return Suite::all;
  throw ConfigError("unknown suite: " + name);
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::kahler: return "kahler";
    case Suite::reduction: return "reduction";
    case Suite::unfolding: return "unfolding";
    case Suite::crosscheck: return "crosscheck";
    case Suite::all: return "all";
  }
  return "?";
}

std::string to_string(Format format) { return format == Format::json ? "json" : "csv"; }

namespace {

void validate(const RunConfig& config) {
  if (config.dim < 1 || config.dim > 64)
    throw ConfigError("dim must lie in [1, 64], got " + std::to_string(config.dim));
  if (config.trials < 1) throw ConfigError("trials must be positive");
  if (!(config.tol > 0)) throw ConfigError("tol must be positive");
  const bool needs_n2 = config.suite == Suite::reduction || config.suite == Suite::crosscheck ||
                        config.suite == Suite::all;
  if (needs_n2 && config.dim != 2)
    throw ConfigError("suite '" + to_string(config.suite) + "' requires dim = 2, got " +
                      std::to_string(config.dim));
}

}  // namespace

Report run_suite(const RunConfig& config) {
  validate(config);
  const auto started = std::chrono::steady_clock::now();

  Report report;
  report.config = config;
  report.version = version_string;

  for (const auto& def : check_registry()) {
    if (config.suite != Suite::all && def.suite != config.suite) continue;
    ErrorAccumulator acc;
    CheckRecord record;
    record.check_id = def.id;
    record.identity = def.identity;
    record.n_trials = def.run(config, acc);
    record.max_abs_err = acc.max_abs();
    record.max_rel_err = acc.max_rel();
    record.tol = def.fixed_tol > 0 ? def.fixed_tol : config.tol;
    const double err = def.mode == ErrorMode::relative ? record.max_rel_err : record.max_abs_err;
    record.pass = err <= record.tol;
    report.checks.push_back(std::move(record));
  }

  const auto elapsed = std::chrono::steady_clock::now() - started;
  report.wall_time_ms =
      config.include_timing
          ? std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count()
          : 0.0;

  if (!config.out_path.empty()) {
    try {
      write_file_atomic(config.out_path, config.format == Format::json ? report_to_json(report)
                                                                       : report_to_csv(report));
    } catch (const std::exception& e) {
      throw IoError(e.what());
    }
  }
  return report;
}

std::string report_to_json(const Report& report) {
  nlohmann::json j;
  j["schema_version"] = "1";
  j["version"] = report.version;
  j["config"] = {{"dim", report.config.dim},
                 {"trials", report.config.trials},
                 {"seed", report.config.seed},
                 {"tol", report.config.tol},
                 {"suite", to_string(report.config.suite)},
                 {"format", to_string(report.config.format)}};
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"check_id", c.check_id},
                      {"identity", c.identity},
                      {"n_trials", c.n_trials},
                      {"max_abs_err", c.max_abs_err},
                      {"max_rel_err", c.max_rel_err},
                      {"tol", c.tol},
                      {"pass", c.pass}});
  }
  j["checks"] = std::move(checks);
  j["all_pass"] = report.all_pass();
  j["wall_time_ms"] = report.wall_time_ms;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const Report& report) {
  std::ostringstream out;
  out << "check_id,identity,n_trials,max_abs_err,max_rel_err,tol,pass\n";
  for (const auto& c : report.checks) {
    std::string identity = c.identity;
    for (auto& ch : identity)
      if (ch == ',') ch = ';';
    out << c.check_id << ',' << identity << ',' << c.n_trials << ','
        << format_shortest(c.max_abs_err) << ',' << format_shortest(c.max_rel_err) << ','
        << format_shortest(c.tol) << ',' << (c.pass ? "true" : "false") << '\n';
  }
  out << "# version=" << report.version << " wall_time_ms=" << format_shortest(report.wall_time_ms)
      << " all_pass=" << (report.all_pass() ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace qgeom::verify
