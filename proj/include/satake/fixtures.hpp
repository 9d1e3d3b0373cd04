#pragma once

// Shipped root data. Bases:
//   SL2   X = Z (fundamental weight), alpha = (2), alpha^v = (1)
//   PGL2  X = Z (the root), alpha = (1), alpha^v = (2)
//   GL2   X = Z^2 (standard), alpha = e1 - e2, alpha^v = e1 - e2
//   SL3   fundamental weights; simple coroots are the dual basis
//   PGL3  X = root lattice in the simple-root basis
//   Sp4   fundamental weights, type C2 with alpha_2 long
//   G2    fundamental weights, alpha_1 long

#include "satake/lattice_core.hpp"

#include <string>
#include <vector>

namespace satake {

struct Fixture {
  std::string name;
  RootDatum datum;
};

/// Throws DomainError for an unknown name.
RootDatum fixture_datum(const std::string& name);
std::vector<std::string> fixture_names();
std::vector<Fixture> all_fixtures();

}  // namespace satake
