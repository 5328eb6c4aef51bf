#include <mpfr.h>

#include <string>
#include <vector>

#include "gnnsep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  int code = gnnsep::run_cli(std::move(args));
  mpfr_free_cache();
  return code;
}
