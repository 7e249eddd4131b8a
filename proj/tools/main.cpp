#include <iostream>

#include "motiondual/cli.hpp"

int main(int argc, char** argv) {
  return motiondual::cli::run(argc, argv, std::cout, std::cerr);
}
