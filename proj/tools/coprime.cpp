#include <string>
#include <vector>

#include "coprime/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return coprime::cli::run_cli(std::move(args));
}
