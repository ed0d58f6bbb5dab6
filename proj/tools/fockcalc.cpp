#include <cstdlib>
#include <iostream>

#include "fockcalc/cli/app.hpp"

int main(int argc, char** argv) {
  return fockcalc::cli::run(argc, argv, std::cout, std::cerr, std::getenv("FOCKCALC_SEED"));
}
