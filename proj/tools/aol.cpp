#include "aol/cli.hpp"

int main(int argc, char** argv) {
  aol::keep_freed_memory();
  return aol::run_cli(argc, argv);
}
