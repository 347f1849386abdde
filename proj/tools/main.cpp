/**
 * @file main.cpp
 * @brief Entry point for the metallic CLI.
 */
#include <iostream>
#include <string>
#include <vector>

#include "metallic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return metallic::cli_main(args, std::cout, std::cerr);
}
