#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  euroqual::cli::RunSpec spec;
  try {
    spec = euroqual::cli::parse_args(argc, argv);
  } catch (const euroqual::cli::ArgsError& e) {
    (e.exit_code() == 0 ? std::cout : std::cerr) << e.what() << '\n';
    return e.exit_code();
  }
  return euroqual::cli::run(spec, std::cout, std::cerr);
}
