#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const bool tty = isatty(STDOUT_FILENO) != 0;
  return aaa::cli::run(args, aaa::cli::Streams{std::cin, std::cout, std::cerr, tty});
}
