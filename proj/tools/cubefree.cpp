#include <iostream>
#include <string>
#include <vector>

#include "cubefree/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = cubefree::cli::execute(args, std::cin);
  if (!outcome.out.empty()) std::cout << outcome.out << '\n';
  if (!outcome.err.empty()) std::cerr << outcome.err << '\n';
  return outcome.exit_code;
}
