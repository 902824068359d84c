// Shannon entropy of probability distributions and Deng entropy of mass
// functions. Deng entropy divides each mass by 2^|F| - 1, the number of
// non-empty sub-states of the focal element, and coincides with Shannon
// entropy on Bayesian mass functions.
#pragma once

#include "dst/mass_function.hpp"

namespace dst {

struct EntropyValue {
  double value;  // non-negative, finite
  double base;   // logarithm base, > 1
};

// -sum p_i log_base(p_i), with 0 log 0 = 0. Bounded by log_base(n).
EntropyValue shannon_entropy(const ProbabilityDistribution& p,
                             double base = 2.0);

// Shannon entropy of a raw probability vector; entries assumed in [0,1].
double shannon_entropy(const Eigen::VectorXd& probs, double base = 2.0);

// -sum m(F) log_base(m(F) / (2^|F| - 1)) over the focal elements.
EntropyValue deng_entropy(const MassFunction& m, double base = 2.0);

}  // namespace dst
