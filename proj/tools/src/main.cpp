#include <iostream>
#include <string>
#include <vector>

#include "midiso/cli/app.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return midiso::cli::run(args, std::cout, std::cerr);
}
