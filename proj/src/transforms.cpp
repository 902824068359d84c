#include "dst/transforms.hpp"

namespace dst {

ProbabilityDistribution pignistic(const MassFunction& m) {
  int n = m.frame().size();
  Eigen::VectorXd p = Eigen::VectorXd::Zero(n);
  for (const MassEntry& e : m.focal_elements()) {
    double share = e.mass / e.set.cardinality();
    for (int i : e.set.members()) p[i] += share;
  }
  return ProbabilityDistribution(m.frame(), std::move(p));
}

ProbabilityDistribution plausibility_transform(const MassFunction& m) {
  int n = m.frame().size();
  Eigen::VectorXd pl(n);
  for (int i = 0; i < n; ++i) pl[i] = plausibility(m, FocalSet::singleton(i));
  // sum of singleton plausibilities is >= 1 for any valid mass function
  return ProbabilityDistribution(m.frame(), pl / pl.sum());
}

ProbabilityDistribution relative_belief_transform(const MassFunction& m) {
  int n = m.frame().size();
  Eigen::VectorXd bel(n);
  for (int i = 0; i < n; ++i) bel[i] = belief(m, FocalSet::singleton(i));
  double total = bel.sum();
  if (total <= 0.0) {
    throw ValidationError(errc::undefined_transform,
                          "relative belief transform is undefined: all "
                          "singleton beliefs are zero");
  }
  return ProbabilityDistribution(m.frame(), bel / total);
}

ProbabilityDistribution proportional_transform(const MassFunction& m) {
  int n = m.frame().size();
  Eigen::VectorXd singleton = Eigen::VectorXd::Zero(n);
  for (const MassEntry& e : m.focal_elements()) {
    if (e.set.is_singleton()) singleton[e.set.members().front()] = e.mass;
  }
  Eigen::VectorXd p = singleton;
  for (const MassEntry& e : m.focal_elements()) {
    if (e.set.is_singleton()) continue;
    auto members = e.set.members();
    double denom = 0.0;
    for (int i : members) denom += singleton[i];
    if (denom > 0.0) {
      for (int i : members) p[i] += e.mass * singleton[i] / denom;
    } else {
      // no singleton mass to set the proportions: split uniformly
      double share = e.mass / static_cast<double>(members.size());
      for (int i : members) p[i] += share;
    }
  }
  return ProbabilityDistribution(m.frame(), std::move(p));
}

}  // namespace dst
