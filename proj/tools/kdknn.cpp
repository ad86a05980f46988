#include <iostream>

#include "kdknn/cli.hpp"

int main(int argc, char** argv) {
  return kdknn::cli::run(argc, argv, std::cout, std::cerr);
}
