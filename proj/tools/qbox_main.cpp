#include <iostream>
#include <string>
#include <vector>

#include "qbox/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return qbox::cli::run(args, std::cin, std::cout, std::cerr);
}
