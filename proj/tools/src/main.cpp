#include <iostream>

#include "k3cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return k3cli::run(args, std::cout, std::cerr);
}
