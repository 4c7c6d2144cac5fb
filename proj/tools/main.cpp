#include <iostream>

#include "cartan_cli/app.hpp"

int main(int argc, char** argv) {
  return cartan::cli::main_entry(argc, argv, std::cout, std::cerr);
}
