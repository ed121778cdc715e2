#include <iostream>
#include <string>
#include <vector>

#include "gfdm/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return gfdm::cli::main_entry(args, std::cout, std::cerr);
}
