#include <cstdio>
#include <string>
#include <vector>

#include "sieveforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  sieveforge::CommandResult res = sieveforge::run_command(args);
  if (!res.output.empty()) std::fputs(res.output.c_str(), stdout);
  if (!res.error.empty()) std::fputs(res.error.c_str(), stderr);
  return res.exit_code;
}
