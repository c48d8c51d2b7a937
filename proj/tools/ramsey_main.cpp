#include "ramsey/cli.hpp"

int main(int argc, char** argv) {
  return ramsey::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
