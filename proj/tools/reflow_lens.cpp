#include <iostream>
#include <string>
#include <vector>

#include "reflow_lens/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return reflow::cli::run(args, std::cout, std::cerr);
}
