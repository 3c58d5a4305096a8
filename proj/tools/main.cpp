#include <iostream>

#include "conformal/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return conformal::execute({argv + 1, argv + argc}, std::cin, std::cout,
                            std::cerr);
}
