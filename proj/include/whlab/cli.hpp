#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "whlab/linalg.hpp"
#include "whlab/report.hpp"

namespace whlab::cli {

enum class Subcommand { verify, phase, mub, coherent, twomode, all };
enum class OutputFormat { text, json };
enum class CoherentType { I, II, both };

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitBadConfig = 2;

struct RunConfig {
  Subcommand subcommand = Subcommand::all;
  std::vector<double> kappa{0.0};
  double phi = 0.0;
  /// Finite runs may omit it (d comes from kappa); cutoff runs default to 8.
  std::optional<int> dim_or_trunc;
  double tol = 1e-10;
  std::uint64_t seed = 42;
  OutputFormat output = OutputFormat::text;
  std::optional<std::string> out_path;
  CoherentType coherent_type = CoherentType::both;
  Complex z{0.5, 0.0};
  /// mub runs: overlap moduli as `row,col,modulus`.
  std::optional<std::string> csv_path;
};

struct RunResult {
  int exit_code = kExitPass;
  VerificationReport report;
  /// Set when the configuration was rejected (exit code 2).
  std::optional<std::string> error_kind;
  std::optional<std::string> error_message;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; what() is the usage text.
struct HelpRequested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses command-line arguments (without the program name). `env_tol`
/// stands in for WHLAB_TOL and overrides the default tolerance but not --tol.
/// Throws ConfigError on malformed input.
RunConfig parse_args(const std::vector<std::string>& args, std::optional<std::string> env_tol = std::nullopt);

/// Executes the selected suites. Never throws for library errors: they turn
/// into exit code 2 with the error recorded in the result.
RunResult run(const RunConfig& config);

std::string render_json(const RunConfig& config, const RunResult& result);
std::string render_text(const RunConfig& config, const RunResult& result);

/// Writes the report in `format` to `path`, or to `out` when no path is given.
/// Throws std::runtime_error naming the path on IO failure.
void emit_report(const RunConfig& config, const RunResult& result, OutputFormat format,
                 const std::optional<std::string>& path, std::ostream& out);

/// CSV dump of all overlap moduli of the d+1 MUB set.
void write_overlap_csv(int d, const std::string& path);

std::string to_string(Subcommand sub);

}  // namespace whlab::cli
