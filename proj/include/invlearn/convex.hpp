#pragma once

#include <functional>
#include <vector>

#include "invlearn/vec.hpp"

namespace invlearn {

// A closed convex set supporting Euclidean projection.
class ConvexSet {
 public:
  virtual ~ConvexSet() = default;
  virtual int dimension() const = 0;
  virtual Vec project(const Vec& p) const = 0;
  virtual bool contains(const Vec& p, double tol) const = 0;
};

// projection onto a single set, written in place
using Projector = std::function<void(Vec&)>;

struct DykstraOptions {
  double tol = 1e-9;      // on the change of the iterate across one full cycle
  int max_cycles = 100000;
};

// Dykstra's alternating projection onto the intersection of the given sets.
// Throws std::runtime_error when the cycle cap is hit without convergence.
Vec dykstra_project(const Vec& point, const std::vector<Projector>& sets,
                    const DykstraOptions& opts = {});

}  // namespace invlearn
