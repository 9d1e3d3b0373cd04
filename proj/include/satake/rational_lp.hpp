#pragma once

// Exact feasibility over the rationals for {x >= 0 : A x = b}.

#include "satake/types.hpp"

#include <optional>
#include <vector>

namespace satake {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Phase-one simplex with Bland's rule (terminates, exact). Returns a vertex
/// solution if the system is feasible.
std::optional<std::vector<Rational>> find_nonnegative_solution(const RationalMatrix& a, const std::vector<Rational>& b);

inline bool is_feasible(const RationalMatrix& a, const std::vector<Rational>& b) {
  return find_nonnegative_solution(a, b).has_value();
}

}  // namespace satake
