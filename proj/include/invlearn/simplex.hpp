#pragma once

#include <vector>

#include "invlearn/vec.hpp"

namespace invlearn {

struct LpSolution {
  double objective = 0.0;
  Vec x;     // primal solution
  Vec dual;  // dual of the equality rows (y with A^T y <= c)
};

// Solves min c.x subject to A x = b, x >= 0 with a two-phase dense simplex
// (Bland's rule). Intended for the small LPs of the delivery oracle; throws
// std::runtime_error on infeasibility or numerical failure.
LpSolution solve_standard_lp(const std::vector<Vec>& A, const Vec& b, const Vec& c);

}  // namespace invlearn
