// One line per acceptance criterion; exit status 4 when any fails.
#include <iostream>
#include <string>

#include "aol/cli.hpp"
#include "aol/verify.hpp"

int main(int argc, char** argv) {
  aol::keep_freed_memory();
  const std::string suite = argc > 1 ? argv[1] : "all";
  const auto results = aol::run_suite(suite, [](const aol::CriterionResult& r) {
    std::cout << aol::format_result(r) << std::endl;
  });
  return aol::verify_exit_code(results);
}
