#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "yaogame/cli.hpp"

int main(int argc, char** argv) {
  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    return yaogame::cli::run(std::move(args), std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << '\n';
    return 2;
  }
}
