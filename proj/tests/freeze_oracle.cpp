// Prints the lattice-oracle values of D1..D11 on the shared n = 8 fields,
// formatted for pasting into frozen_oracle_values().
#include <cstdio>
#include <cstdlib>

#include "aol/verify.hpp"
#include "defect_oracle.hpp"

int main(int argc, char** argv) {
  const int lattice = argc > 1 ? std::atoi(argv[1]) : 48;
  const auto values = aol::oracle::brute_force_defects(aol::oracle_fields(), aol::kOracleEpsilon, lattice);
  for (std::size_t k = 0; k < values.size(); ++k) std::printf("      %.17g,  // D%zu\n", values[k], k + 1);
}
