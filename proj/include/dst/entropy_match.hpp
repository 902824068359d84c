// Entropy-matching probability transformation: find the distribution inside
// the singleton Bel/Pl box whose Shannon entropy is as close as possible to
// the Deng entropy of the input mass function.
//
// The attainable Shannon entropies over the feasible polytope form the
// interval [H-, H+], where H+ is reached at the unique water-filling point
// and H- at a vertex. The solver classifies the Deng-entropy target against
// that interval:
//   above-max:      target >= H+, return the max-entropy point;
//   below-min:      target <= H-, return the min-entropy vertex;
//   interior:       H- < target < H+, a zero gap is attainable; return the
//                   point with matching entropy on the segment from the
//                   min-entropy vertex to the max-entropy point;
//   point-feasible: the box is a single point (Bayesian input).
#pragma once

#include <string_view>
#include <utility>

#include "dst/entropy.hpp"

namespace dst {

// Intersection of the singleton-bounds box with the probability simplex.
// Non-empty by construction: sum(lower) <= 1 <= sum(upper).
class FeasiblePolytope {
 public:
  explicit FeasiblePolytope(IntervalConstraints constraints)
      : constraints_(std::move(constraints)) {}

  const IntervalConstraints& constraints() const { return constraints_; }
  const Frame& frame() const { return constraints_.frame(); }
  const Eigen::VectorXd& lower() const { return constraints_.lower(); }
  const Eigen::VectorXd& upper() const { return constraints_.upper(); }
  int size() const { return constraints_.size(); }
  bool is_point() const { return constraints_.is_point(); }

 private:
  IntervalConstraints constraints_;
};

enum class Regime { above_max, below_min, interior, point_feasible };

std::string_view regime_name(Regime regime);

struct TransformResult {
  ProbabilityDistribution distribution;
  EntropyValue target_entropy;    // Deng entropy of the input
  EntropyValue achieved_entropy;  // Shannon entropy of the output
  double gap;                     // |target - achieved|
  Regime regime;
  int iterations;
};

struct EntropyMatchOptions {
  double tol = 1e-9;  // entropy-gap tolerance, in units of the chosen base
  double base = 2.0;
};

// Polytope from singleton_bounds(m); asserts the pignistic point is inside.
FeasiblePolytope feasible_region(const MassFunction& m);

// Unique Shannon-entropy maximizer over the polytope, by water-filling:
// p_i = clamp(c, lower_i, upper_i) with the level c found by bisection so
// that the coordinates sum to one.
ProbabilityDistribution max_entropy_point(const FeasiblePolytope& region);

// Entropy-minimizing vertex of the polytope, by exact enumeration: every
// vertex has at most one coordinate strictly between its bounds. Ties break
// to the lexicographically smallest coordinate vector.
std::pair<ProbabilityDistribution, EntropyValue> min_entropy_vertex(
    const FeasiblePolytope& region, double base = 2.0);

// The transformation itself. Throws ConvergenceError if the interior-regime
// bisection cannot reach options.tol within 200 iterations.
TransformResult entropy_match(const MassFunction& m,
                              const EntropyMatchOptions& options = {});

// Exhaustive grid search over the polytope with coordinates that are
// multiples of `step` (sum within step/2 of one). Test oracle only; frames
// of up to 4 elements.
TransformResult grid_oracle(const MassFunction& m, double step,
                            double base = 2.0);

}  // namespace dst
