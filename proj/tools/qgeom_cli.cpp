// qgeom command line: identity verification suites, Schroedinger-flow
// trajectory export, and Bloch-sphere projection of state lists.
//
// Exit codes: 0 all checks pass, 1 check failure, 2 configuration error,
// 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgeom/checks.hpp"
#include "qgeom/hopf.hpp"
#include "qgeom/kahler.hpp"
#include "qgeom/matrix_io.hpp"
#include "qgeom/version.hpp"

namespace {

enum class LogLevel { quiet = 0, info = 1, debug = 2 };

LogLevel log_level() {
  const char* env = std::getenv("VERIFY_LOG");
  if (env == nullptr) return LogLevel::info;
  const std::string value(env);
  if (value == "quiet") return LogLevel::quiet;
  if (value == "debug") return LogLevel::debug;
  return LogLevel::info;
}

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitIoError = 3;

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    values.push_back(std::stod(token, &used));
  }
  return values;
}

/// z0 strings use interleaved pairs "q1,p1,q2,p2,...".
qgeom::HilbertPoint<double> point_from_interleaved(const std::vector<double>& values) {
  if (values.empty() || values.size() % 2 != 0)
    throw qgeom::verify::ConfigError("state must list q,p pairs (even number of values)");
  const Eigen::Index n = static_cast<Eigen::Index>(values.size() / 2);
  qgeom::RealVector<double> coords(2 * n);
  for (Eigen::Index a = 0; a < n; ++a) {
    coords[a] = values[static_cast<std::size_t>(2 * a)];
    coords[n + a] = values[static_cast<std::size_t>(2 * a + 1)];
  }
  return qgeom::HilbertPoint<double>(std::move(coords));
}

qgeom::HermitianMatrix<double> load_hamiltonian(const std::string& source, int dim,
                                                std::uint64_t seed) {
  using qgeom::verify::ConfigError;
  if (source == "pauli1" || source == "pauli2" || source == "pauli3") {
    if (dim != 2) throw ConfigError("pauli presets require --dim 2");
    return qgeom::pauli<double>(source[5] - '0');
  }
  if (source == "identity") return qgeom::HermitianMatrix<double>::identity(dim);
  if (source == "random-gue") {
    qgeom::Rng<double> rng(seed, /*stream=*/0x6eeULL);
    return qgeom::HermitianMatrix<double>(rng.gue_matrix(dim));
  }
  // otherwise a JSON matrix file {dim, re, im}
  const auto loaded = qgeom::hermitian_from_json(qgeom::read_json_file(source));
  if (log_level() >= LogLevel::debug)
    std::cerr << "loaded Hamiltonian from " << source << ", Hermiticity residual "
              << loaded.residual << "\n";
  return loaded.matrix;
}

int run_verify(const qgeom::verify::RunConfig& config) {
  const auto report = qgeom::verify::run_suite(config);
  if (config.out_path.empty()) std::cout << qgeom::verify::report_to_json(report);
  const LogLevel level = log_level();
  if (level >= LogLevel::debug) {
    for (const auto& c : report.checks)
      std::cerr << (c.pass ? "  ok   " : "  FAIL ") << c.check_id
                << "  abs=" << c.max_abs_err << " rel=" << c.max_rel_err << "\n";
  }
  if (level >= LogLevel::info) {
    int passed = 0;
    for (const auto& c : report.checks) passed += c.pass ? 1 : 0;
    std::cerr << "suite=" << to_string(report.config.suite) << " dim=" << report.config.dim
              << ": " << passed << "/" << report.checks.size() << " checks passed\n";
    if (!config.out_path.empty()) std::cerr << "report written to " << config.out_path << "\n";
  }
  return report.all_pass() ? kExitPass : kExitCheckFailure;
}

int run_evolve(const std::string& hamiltonian, int dim, std::uint64_t seed, const std::string& z0,
               double t_max, int steps, const std::string& out_path) {
  using qgeom::verify::ConfigError;
  const auto z_start = point_from_interleaved(parse_number_list(z0));
  if (z_start.is_zero()) throw ConfigError("z0 must be nonzero");
  if (dim > 0 && z_start.dim() != dim)
    throw ConfigError("z0 lists " + std::to_string(z_start.dim()) +
                      " amplitudes but --dim is " + std::to_string(dim));
  const int n = static_cast<int>(z_start.dim());
  const auto h = load_hamiltonian(hamiltonian, n, seed);
  if (h.dim() != n) throw ConfigError("Hamiltonian dimension does not match z0");
  if (steps < 1) throw ConfigError("steps must be positive");
  if (!std::isfinite(t_max)) throw ConfigError("t-max must be finite");

  std::ostringstream csv;
  csv << "t";
  for (int a = 1; a <= n; ++a) csv << ",q" << a;
  for (int a = 1; a <= n; ++a) csv << ",p" << a;
  csv << ",norm_sq";
  if (n == 2) csv << ",y1,y2,y3";
  csv << "\n";

  const qgeom::PauliFrame<double> frame;
  for (int i = 0; i <= steps; ++i) {
    const double t = t_max * i / steps;
    const auto z = qgeom::schrodinger_flow(h, z_start, t);
    csv << qgeom::format_shortest(t);
    for (Eigen::Index k = 0; k < 2 * z.dim(); ++k)
      csv << ',' << qgeom::format_shortest(z.coords()[k]);
    csv << ',' << qgeom::format_shortest(z.norm_squared());
    if (n == 2)
      for (int j = 1; j <= 3; ++j) csv << ',' << qgeom::format_shortest(frame.y(j, z));
    csv << "\n";
  }
  qgeom::write_file_atomic(out_path, csv.str());
  if (log_level() >= LogLevel::info)
    std::cerr << "trajectory with " << steps + 1 << " samples written to " << out_path << "\n";
  return kExitPass;
}

int run_bloch_export(const std::string& in_path, const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) throw std::runtime_error("cannot open file: " + in_path);
  std::ostringstream csv;
  csv << "y1,y2,y3\n";
  std::string line;
  int line_number = 0;
  int skipped = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    const auto values = parse_number_list(line);
    if (values.size() != 4)
      throw qgeom::verify::ConfigError("line " + std::to_string(line_number) +
                                       ": expected q1,p1,q2,p2");
    const auto z = point_from_interleaved(values);
    if (z.is_zero()) {
      std::cerr << "line " << line_number << ": zero vector skipped\n";
      ++skipped;
      continue;
    }
    const auto chart = qgeom::project_point(z);
    csv << qgeom::format_shortest(chart.y[0]) << ',' << qgeom::format_shortest(chart.y[1]) << ','
        << qgeom::format_shortest(chart.y[2]) << "\n";
  }
  qgeom::write_file_atomic(out_path, csv.str());
  if (log_level() >= LogLevel::info)
    std::cerr << "bloch export written to " << out_path
              << (skipped > 0 ? " (" + std::to_string(skipped) + " zero rows skipped)" : "")
              << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qgeom: numerical Kaehler geometry of quantum pure-state spaces"};
  app.set_version_flag("--version", qgeom::version_string);
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run an identity verification suite");
  std::string suite_name = "all";
  qgeom::verify::RunConfig config;
  bool no_timing = false;
  verify->add_option("--suite", suite_name, "kahler|reduction|unfolding|crosscheck|all")
      ->check(CLI::IsMember({"kahler", "reduction", "unfolding", "crosscheck", "all"}));
  verify->add_option("--dim", config.dim, "Hilbert-space dimension N");
  verify->add_option("--trials", config.trials, "random trials per check");
  verify->add_option("--seed", config.seed, "base seed for all randomness");
  verify->add_option("--tol", config.tol, "relative tolerance for pass verdicts");
  verify->add_option("--out", config.out_path, "report file path (default: stdout)");
  std::string format_name = "json";
  verify->add_option("--format", format_name, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--no-timing", no_timing,
                   "pin wall_time_ms to 0 so identical configs give identical bytes");

  // evolve
  auto* evolve = app.add_subcommand("evolve", "integrate the Schroedinger flow and export CSV");
  std::string hamiltonian = "pauli3";
  std::string z0;
  double t_max = 6.283185307179586;
  int steps = 100;
  int evolve_dim = 0;
  std::uint64_t evolve_seed = 1;
  std::string evolve_out = "trajectory.csv";
  evolve->add_option("--hamiltonian", hamiltonian,
                     "pauli1|pauli2|pauli3|identity|random-gue or a JSON matrix file");
  evolve->add_option("--z0", z0, "initial state as q1,p1,q2,p2,...")->required();
  evolve->add_option("--t-max", t_max, "end time");
  evolve->add_option("--steps", steps, "number of uniform steps (steps+1 rows)");
  evolve->add_option("--dim", evolve_dim, "dimension check for presets (optional)");
  evolve->add_option("--seed", evolve_seed, "seed for the random-gue preset");
  evolve->add_option("--out", evolve_out, "output CSV path");

  // bloch-export
  auto* bloch = app.add_subcommand("bloch-export", "project a list of C^2 states to Bloch points");
  std::string bloch_in, bloch_out;
  bloch->add_option("--in", bloch_in, "input file, one q1,p1,q2,p2 line per state")->required();
  bloch->add_option("--out", bloch_out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfigError;
  }

  try {
    if (verify->parsed()) {
      config.suite = qgeom::verify::suite_from_string(suite_name);
      config.format =
          format_name == "csv" ? qgeom::verify::Format::csv : qgeom::verify::Format::json;
      config.include_timing = !no_timing;
      return run_verify(config);
    }
    if (evolve->parsed())
      return run_evolve(hamiltonian, evolve_dim, evolve_seed, z0, t_max, steps, evolve_out);
    if (bloch->parsed()) return run_bloch_export(bloch_in, bloch_out);
  } catch (const qgeom::verify::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const qgeom::verify::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIoError;
  }
  return kExitConfigError;
}
