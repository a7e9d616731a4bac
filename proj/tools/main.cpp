#include "ssrbell_cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return ssrbell::cli::run_app({argv + 1, argv + argc}, std::cout, std::cerr);
}
