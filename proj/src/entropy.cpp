#include "dst/entropy.hpp"

#include <cmath>

namespace dst {

namespace {

double checked_log_base(double base) {
  if (std::isnan(base) || !std::isfinite(base) || base <= 1.0) {
    throw ValidationError(errc::invalid_base,
                          "logarithm base must be a finite value > 1");
  }
  return std::log(base);
}

}  // namespace

double shannon_entropy(const Eigen::VectorXd& probs, double base) {
  double ln_base = checked_log_base(base);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    double p = probs[i];
    if (p > 0.0) acc -= p * std::log(p);
  }
  return acc / ln_base;
}

EntropyValue shannon_entropy(const ProbabilityDistribution& p, double base) {
  return EntropyValue{shannon_entropy(p.probs(), base), base};
}

EntropyValue deng_entropy(const MassFunction& m, double base) {
  double ln_base = checked_log_base(base);
  double acc = 0.0;
  for (const MassEntry& e : m.focal_elements()) {
    // 2^|F| - 1 is exact in double for |F| <= kMaxFrameSize.
    double states = static_cast<double>((std::uint32_t{1} << e.set.cardinality()) - 1);
    acc -= e.mass * (std::log(e.mass) - std::log(states));
  }
  return EntropyValue{acc / ln_base, base};
}

}  // namespace dst
