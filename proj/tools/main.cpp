#include <iostream>

#include "hodgeconn/cli.hpp"

int main(int argc, char** argv) {
  auto res = hodge::run_cli(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
