#include <iostream>
#include <string>
#include <vector>

#include "monocorr/cli/campaign.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return monocorr::cli::execute(args, std::cout, std::cerr);
}
