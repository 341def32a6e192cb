#include <cstdlib>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env;
  if (const char* v = std::getenv("QMARKOV_ORACLE_BOUND")) env = v;
  return qmarkov::cli::run(std::move(args), std::cout, std::cerr, env);
}
