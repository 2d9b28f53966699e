// Tabulates the staircase-closure values tau(b_n) for the built-in catalog
// and checks each against the closed form |G| * #{g : g^n = 1} as it goes.
// The staircase b_n closes to the lens space L(n,1), so column n over group G
// counts |G| times the n-torsion of G.

#include <iomanip>
#include <iostream>

#include "doubletrace/doubletrace.hpp"

int main() {
  constexpr int kMaxN = 4;

  std::cout << std::left << std::setw(8) << "group" << std::right << std::setw(7) << "|G|";
  for (int n = 1; n <= kMaxN; ++n) std::cout << std::setw(10) << ("n=" + std::to_string(n));
  std::cout << "\n";

  for (const doubletrace::CatalogEntry& e : doubletrace::standard_catalog()) {
    if (e.group.order > 16) continue;
    std::cout << std::left << std::setw(8) << e.name << std::right << std::setw(7)
              << e.group.order;
    for (int n = 1; n <= kMaxN; ++n) {
      const doubletrace::BigInt tau =
          doubletrace::tau_fast(e.group, doubletrace::lens_braid(n));
      if (tau != doubletrace::lens_tau_closed_form(e.group, n)) {
        std::cerr << "closed form mismatch on " << e.name << " at n = " << n << "\n";
        return 1;
      }
      std::cout << std::setw(10) << tau.str();
    }
    std::cout << "\n";
  }
  return 0;
}
