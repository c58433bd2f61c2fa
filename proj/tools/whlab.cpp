#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "whlab/cli.hpp"

int main(int argc, char** argv) {
  using namespace whlab::cli;

  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_tol;
  if (const char* env = std::getenv("WHLAB_TOL")) env_tol = env;

  RunConfig config;
  try {
    config = parse_args(args, env_tol);
  } catch (const HelpRequested& help) {
    std::cout << help.what();
    return kExitPass;
  } catch (const ConfigError& e) {
    std::cerr << "whlab: " << e.what() << "\n";
    return kExitBadConfig;
  }

  const RunResult result = run(config);
  try {
    emit_report(config, result, config.output, config.out_path, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "whlab: " << e.what() << "\n";
    return kExitBadConfig;
  }
  if (result.error_message) std::cerr << "whlab: " << *result.error_message << "\n";
  return result.exit_code;
}
