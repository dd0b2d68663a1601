#include <string>
#include <vector>

#include "hrg/cli.hpp"

int main(int argc, char** argv) {
  return hrg::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
