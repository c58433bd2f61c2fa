#include "whlab/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "whlab/error.hpp"
#include "whlab/fock.hpp"
#include "whlab/mub.hpp"
#include "whlab/suites.hpp"

namespace whlab::cli {

namespace {

constexpr int kDefaultTruncation = 8;
constexpr std::size_t kMaxLineWidth = 120;

std::string to_string(OutputFormat f) { return f == OutputFormat::json ? "json" : "text"; }

std::string to_string(CoherentType t) {
  switch (t) {
    case CoherentType::I: return "I";
    case CoherentType::II: return "II";
    case CoherentType::both: return "both";
  }
  return "both";
}

CoherentSelection selection(CoherentType t) {
  switch (t) {
    case CoherentType::I: return CoherentSelection::TypeI;
    case CoherentType::II: return CoherentSelection::TypeII;
    case CoherentType::both: return CoherentSelection::Both;
  }
  return CoherentSelection::Both;
}

FockSpace resolve_space(const AlgebraParams& params, const std::optional<int>& dim_or_trunc) {
  if (params.is_finite()) {
    if (dim_or_trunc && *dim_or_trunc != params.finite_dim()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "--dim " + std::to_string(*dim_or_trunc) + " but kappa_1 fixes d = " +
                      std::to_string(params.finite_dim()));
    }
    return FockSpace::finite(params);
  }
  return FockSpace::truncated(params, dim_or_trunc.value_or(kDefaultTruncation));
}

int twomode_jmax(double kappa, const std::optional<int>& dim_or_trunc) {
  if (kappa < 0.0) {
    const int jmax = static_cast<int>(std::lround(-1.0 / kappa));
    if (dim_or_trunc && *dim_or_trunc != jmax) {
      throw Error(ErrorKind::DimensionMismatch,
                  "--jmax " + std::to_string(*dim_or_trunc) + " but -1/kappa = " + std::to_string(jmax));
    }
    return jmax;
  }
  return dim_or_trunc.value_or(kDefaultTruncation);
}

double single_kappa(const AlgebraParams& params) {
  if (params.r() != 1) {
    throw Error(ErrorKind::NotSingleParameter, "the two-mode algebra takes exactly one kappa");
  }
  return params.kappa(0);
}

void run_suites(const RunConfig& c, VerificationReport& report) {
  switch (c.subcommand) {
    case Subcommand::mub: {
      int d = 0;
      if (c.dim_or_trunc) {
        d = *c.dim_or_trunc;
      } else {
        const AlgebraParams params = AlgebraParams::make(c.kappa, c.phi);
        if (!params.is_finite()) throw ConfigError("mub needs --dim (or a finite kappa)");
        d = params.finite_dim();
      }
      report.append(mub_suite(d, c.tol));
      if (c.csv_path) write_overlap_csv(d, *c.csv_path);
      return;
    }
    case Subcommand::twomode: {
      const AlgebraParams params = AlgebraParams::make(c.kappa, c.phi);
      const double kappa = single_kappa(params);
      report.append(twomode_suite(kappa, twomode_jmax(kappa, c.dim_or_trunc), c.tol));
      return;
    }
    default:
      break;
  }

  const AlgebraParams params = AlgebraParams::make(c.kappa, c.phi);
  const FockSpace space = resolve_space(params, c.dim_or_trunc);
  switch (c.subcommand) {
    case Subcommand::verify:
      report.append(algebra_suite(params, space, c.tol));
      return;
    case Subcommand::phase:
      report.append(phase_suite(params, space, c.tol, c.seed));
      return;
    case Subcommand::coherent:
      report.append(coherent_suite(params, space, c.z, selection(c.coherent_type), c.tol, c.seed));
      return;
    case Subcommand::all: {
      report.append(algebra_suite(params, space, c.tol));
      report.append(phase_suite(params, space, c.tol, c.seed));

      // Skip the Klauder-Perelomov family where it is undefined instead of failing the whole run.
      CoherentSelection sel = selection(c.coherent_type);
      if (!space.is_finite() && sel != CoherentSelection::TypeII) {
        const bool multi = params.r() != 1;
        const bool outside = !multi && params.kappa(0) > 0.0 &&
                             std::abs(c.z) >= 1.0 / std::sqrt(params.kappa(0));
        if (multi || outside) {
          report.label("coherent.kp", multi ? "undefined for r >= 2" : "|z| outside 1/sqrt(kappa)");
          sel = CoherentSelection::TypeII;
        }
      }
      report.append(coherent_suite(params, space, c.z, sel, c.tol, c.seed));

      report.append(mub_suite(space.size(), c.tol));
      if (c.csv_path) write_overlap_csv(space.size(), *c.csv_path);
      if (params.r() == 1) {
        const double kappa = params.kappa(0);
        report.append(twomode_suite(kappa, kappa < 0.0 ? 0 : space.size(), c.tol));
      }
      return;
    }
    default:
      return;
  }
}

std::string format_sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

std::string to_string(Subcommand sub) {
  switch (sub) {
    case Subcommand::verify: return "verify";
    case Subcommand::phase: return "phase";
    case Subcommand::mub: return "mub";
    case Subcommand::coherent: return "coherent";
    case Subcommand::twomode: return "twomode";
    case Subcommand::all: return "all";
  }
  return "all";
}

RunConfig parse_args(const std::vector<std::string>& args, std::optional<std::string> env_tol) {
  RunConfig config;
  CLI::App app{"Generalized Weyl-Heisenberg algebra laboratory", "whlab"};

  const std::map<std::string, Subcommand> subs{
      {"verify", Subcommand::verify},     {"phase", Subcommand::phase},
      {"mub", Subcommand::mub},           {"coherent", Subcommand::coherent},
      {"twomode", Subcommand::twomode},   {"all", Subcommand::all}};
  const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::text},
                                                    {"json", OutputFormat::json}};
  const std::map<std::string, CoherentType> types{
      {"I", CoherentType::I}, {"II", CoherentType::II}, {"both", CoherentType::both}};

  std::vector<double> kappa;
  std::optional<int> dim;
  std::optional<int> trunc;
  std::optional<int> jmax;
  std::optional<double> tol;
  std::string out_path;
  std::string csv_path;
  double z_re = config.z.real();
  double z_im = config.z.imag();

  app.add_option("subcommand", config.subcommand, "verify | phase | mub | coherent | twomode | all")
      ->required()
      ->transform(CLI::CheckedTransformer(subs))
      ->option_text("SUBCOMMAND REQUIRED");
  app.add_option("--kappa", kappa, "deformation parameter; repeat for kappa_1, kappa_2, ...");
  app.add_option("--phi", config.phi, "phase reference phi");
  auto* dim_opt = app.add_option("--dim", dim, "dimension (finite runs, mub)");
  auto* trunc_opt = app.add_option("--trunc", trunc, "truncation order s (infinite runs)");
  auto* jmax_opt = app.add_option("--jmax", jmax, "two-mode cutoff");
  dim_opt->excludes(trunc_opt)->excludes(jmax_opt);
  trunc_opt->excludes(jmax_opt);
  app.add_option("--tol", tol, "tolerance (default 1e-10, env WHLAB_TOL)");
  app.add_option("--seed", config.seed, "seed for randomized checks");
  app.add_option("--output", config.output, "text | json")
      ->transform(CLI::CheckedTransformer(formats))
      ->option_text("FORMAT");
  app.add_option("--out", out_path, "write the report to this file");
  app.add_option("--type", config.coherent_type, "coherent family: I | II | both")
      ->transform(CLI::CheckedTransformer(types))
      ->option_text("TYPE");
  app.add_option("--z-re", z_re, "real part of z");
  app.add_option("--z-im", z_im, "imaginary part of z");
  app.add_option("--csv", csv_path, "mub: dump overlap moduli as CSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  if (!kappa.empty()) config.kappa = kappa;
  if (dim) config.dim_or_trunc = dim;
  if (trunc) config.dim_or_trunc = trunc;
  if (jmax) config.dim_or_trunc = jmax;
  if (tol) {
    config.tol = *tol;
  } else if (env_tol) {
    try {
      std::size_t used = 0;
      config.tol = std::stod(*env_tol, &used);
      if (used != env_tol->size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ConfigError("WHLAB_TOL is not a number: '" + *env_tol + "'");
    }
  }
  if (!out_path.empty()) config.out_path = out_path;
  if (!csv_path.empty()) config.csv_path = csv_path;
  config.z = Complex{z_re, z_im};

  if (!(config.tol > 0.0) || !std::isfinite(config.tol)) throw ConfigError("tolerance must be > 0");
  if (config.dim_or_trunc && *config.dim_or_trunc < 2) throw ConfigError("dimension must be >= 2");
  if (!std::isfinite(config.phi) || !std::isfinite(z_re) || !std::isfinite(z_im)) {
    throw ConfigError("phi and z must be finite");
  }
  return config;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    if (!(config.tol > 0.0)) throw ConfigError("tolerance must be > 0");
    if (config.dim_or_trunc && *config.dim_or_trunc < 2) throw ConfigError("dimension must be >= 2");
    run_suites(config, result.report);
  } catch (const Error& e) {
    result.error_kind = std::string(whlab::to_string(e.kind()));
    result.error_message = e.what();
  } catch (const ConfigError& e) {
    result.error_kind = "BadConfig";
    result.error_message = e.what();
  } catch (const std::runtime_error& e) {
    result.error_kind = "IOError";
    result.error_message = e.what();
  }
  result.report.sort_by_name();
  if (result.error_kind) {
    result.exit_code = kExitBadConfig;
  } else {
    result.exit_code = result.report.all_pass() ? kExitPass : kExitFail;
  }
  return result;
}

std::string render_json(const RunConfig& config, const RunResult& result) {
  using json = nlohmann::ordered_json;
  json cfg;
  cfg["subcommand"] = to_string(config.subcommand);
  cfg["kappa"] = config.kappa;
  cfg["phi"] = config.phi;
  cfg["dim_or_trunc"] = config.dim_or_trunc ? json(*config.dim_or_trunc) : json(nullptr);
  cfg["tol"] = config.tol;
  cfg["seed"] = config.seed;
  cfg["output"] = to_string(config.output);
  cfg["type"] = to_string(config.coherent_type);
  cfg["z"] = {config.z.real(), config.z.imag()};

  json items = json::array();
  for (const ReportItem& item : result.report.items()) {
    items.push_back({{"name", item.name},
                     {"max_deviation", item.max_deviation},
                     {"tolerance", item.tolerance},
                     {"pass", item.pass},
                     {"provenance", item.provenance}});
  }
  json observations = json::object();
  for (const Observation& o : result.report.observations()) observations[o.name] = o.value;
  json labels = json::object();
  for (const Label& l : result.report.labels()) labels[l.name] = l.value;

  json doc;
  doc["version"] = 1;
  doc["config"] = std::move(cfg);
  doc["items"] = std::move(items);
  doc["summary"] = {{"passed", result.report.passed()},
                    {"total", result.report.total()},
                    {"exit_code", result.exit_code}};
  doc["observations"] = std::move(observations);
  doc["labels"] = std::move(labels);
  if (result.error_kind) {
    doc["error"] = {{"kind", *result.error_kind}, {"message", result.error_message.value_or("")}};
  }
  return doc.dump(2) + "\n";
}

std::string render_text(const RunConfig& config, const RunResult& result) {
  std::ostringstream os;
  auto emit = [&](std::string line) {
    if (line.size() > kMaxLineWidth) line.resize(kMaxLineWidth);
    os << line << '\n';
  };

  std::ostringstream head;
  head << "whlab " << to_string(config.subcommand) << "  kappa=[";
  for (std::size_t i = 0; i < config.kappa.size(); ++i) head << (i ? "," : "") << config.kappa[i];
  head << "] phi=" << config.phi << " dim="
       << (config.dim_or_trunc ? std::to_string(*config.dim_or_trunc) : std::string("auto"))
       << " tol=" << config.tol << " seed=" << config.seed;
  emit(head.str());
  if (result.error_kind) {
    emit("error: " + result.error_message.value_or(*result.error_kind));
    return os.str();
  }

  char line[256];
  std::snprintf(line, sizeof line, "%-38s %-11s %-11s %-6s %s", "check", "deviation", "tolerance",
                "status", "relation");
  emit(line);
  for (const ReportItem& item : result.report.items()) {
    std::snprintf(line, sizeof line, "%-38s %-11s %-11s %-6s %s", item.name.c_str(),
                  format_sci(item.max_deviation).c_str(), format_sci(item.tolerance).c_str(),
                  item.pass ? "PASS" : "FAIL", item.provenance.c_str());
    emit(line);
  }
  for (const Observation& o : result.report.observations()) {
    std::snprintf(line, sizeof line, "%-38s %-11s (observed)", o.name.c_str(), format_sci(o.value).c_str());
    emit(line);
  }
  for (const Label& l : result.report.labels()) emit(l.name + ": " + l.value);
  emit("summary: " + std::to_string(result.report.passed()) + "/" +
       std::to_string(result.report.total()) + " passed");
  return os.str();
}

void emit_report(const RunConfig& config, const RunResult& result, OutputFormat format,
                 const std::optional<std::string>& path, std::ostream& out) {
  const std::string body =
      format == OutputFormat::json ? render_json(config, result) : render_text(config, result);
  if (!path) {
    out << body;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open report file '" + *path + "'");
  file << body;
  if (!file) throw std::runtime_error("failed writing report file '" + *path + "'");
}

void write_overlap_csv(int d, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open CSV file '" + path + "'");
  file << "row,col,modulus\n";
  char line[96];
  for (const OverlapEntry& e : mub_overlaps(d)) {
    std::snprintf(line, sizeof line, "%d,%d,%.17g\n", e.row, e.col, e.modulus);
    file << line;
  }
  if (!file) throw std::runtime_error("failed writing CSV file '" + path + "'");
}

}  // namespace whlab::cli
