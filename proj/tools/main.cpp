#include <vector>

#include "dast/cli.hpp"

int main(int argc, char** argv) {
  return dast::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
