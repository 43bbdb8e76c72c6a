#include <csignal>
#include <iostream>
#include <string>
#include <vector>

#include "hyperlines/cli.hpp"

namespace {

extern "C" void on_interrupt(int) { hyperlines::cli::interrupt_flag().store(true); }

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_interrupt);
  std::vector<std::string> args(argv + 1, argv + argc);
  return hyperlines::cli::run(args, std::cin, std::cout, std::cerr);
}
