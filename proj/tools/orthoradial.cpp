#include <iostream>

#include "orthoradial/io.hpp"

int main(int argc, char** argv) {
  return orth::cli_main(argc, argv, std::cout, std::cerr);
}
