#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  using namespace su11::cli;
  RunConfig config;
  try {
    config = parse_args(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const HelpRequested& h) {
    std::cout << h.what();
    return kExitPass;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  const auto result = run(config);
  std::cout << result.report;
  std::cerr << result.diagnostics;
  return result.exit_code;
}
