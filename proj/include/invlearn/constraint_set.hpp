#pragma once

#include <optional>
#include <vector>

#include "invlearn/convex.hpp"
#include "invlearn/vec.hpp"

namespace invlearn {

struct Halfspace {
  Vec a;        // nonnegative coefficients
  double rhs;   // a . y <= rhs
};

// Box bounds plus nonnegative linear halfspaces A y <= rho. The set must be
// bounded: every coordinate needs a finite box bound or a covering halfspace.
// Immutable after construction.
class ConstraintSet : public ConvexSet {
 public:
  // box [lower, upper] with optional halfspaces; empty upper means "no box cap"
  ConstraintSet(int dimension, Vec lower, std::optional<Vec> upper,
                std::vector<Halfspace> halfspaces);

  // convenience: [0, upper]^n
  static ConstraintSet box(Vec upper);
  // convenience: {y >= 0, A y <= rho}, A given row-major m x n
  static ConstraintSet polyhedron(int dimension, const std::vector<double>& A_row_major,
                                  const Vec& rho);

  int dimension() const override { return n_; }
  Vec project(const Vec& p) const override;
  bool contains(const Vec& p, double tol) const override;

  // certified upper bound on the Euclidean diameter
  double diameter_bound() const;
  // per-coordinate implied upper bounds (box intersected with halfspace caps)
  const Vec& implied_upper() const { return implied_upper_; }

  const Vec& lower() const { return lower_; }
  const std::optional<Vec>& upper() const { return upper_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

  // same halfspaces with the box floor raised to max(lower, floor); used by
  // transition solvers that must keep y >= x
  ConstraintSet with_floor(const Vec& floor) const;

 private:
  int n_;
  Vec lower_;
  std::optional<Vec> upper_;
  std::vector<Halfspace> halfspaces_;
  Vec implied_upper_;
};

}  // namespace invlearn
