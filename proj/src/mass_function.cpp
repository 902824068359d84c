#include "dst/mass_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dst {

namespace {

void require_within_frame(const Frame& frame, FocalSet set) {
  if (!set.fits(frame.size())) {
    throw ValidationError(errc::foreign_set,
                          "subset refers to elements outside the frame");
  }
}

}  // namespace

double MassFunction::mass(FocalSet set) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), set,
      [](const MassEntry& e, FocalSet s) { return e.set < s; });
  if (it != entries_.end() && it->set == set) return it->mass;
  return 0.0;
}

bool MassFunction::is_bayesian() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const MassEntry& e) { return e.set.is_singleton(); });
}

MassFunction make_mass(Frame frame, std::vector<MassEntry> entries,
                       MassValidation* validation) {
  MassValidation report;
  std::vector<MassEntry> kept;
  kept.reserve(entries.size());
  for (const MassEntry& entry : entries) {
    require_within_frame(frame, entry.set);
    if (std::isnan(entry.mass) || entry.mass < 0.0) {
      throw ValidationError(errc::negative_mass,
                            "mass " + std::to_string(entry.mass) +
                                " is negative");
    }
    if (entry.mass > 1.0) {
      throw ValidationError(errc::mass_out_of_range,
                            "mass " + std::to_string(entry.mass) +
                                " exceeds 1");
    }
    if (entry.mass == 0.0) {
      ++report.dropped_zero_entries;
      continue;
    }
    kept.push_back(entry);
  }
  std::sort(kept.begin(), kept.end(),
            [](const MassEntry& a, const MassEntry& b) { return a.set < b.set; });
  for (std::size_t i = 1; i < kept.size(); ++i) {
    if (kept[i].set == kept[i - 1].set) {
      throw ValidationError(errc::duplicate_subset,
                            "subset assigned mass more than once");
    }
  }
  double sum = 0.0;
  for (const MassEntry& e : kept) sum += e.mass;
  if (std::abs(sum - 1.0) > kMassSumTolerance) {
    throw ValidationError(errc::mass_sum,
                          "masses sum to " + std::to_string(sum) +
                              ", expected 1");
  }
  report.input_sum = sum;
  report.renorm_delta = sum - 1.0;
  if (sum != 1.0) {
    report.renormalized = true;
    for (MassEntry& e : kept) e.mass /= sum;
  }
  if (validation != nullptr) *validation = report;
  return MassFunction(std::move(frame), std::move(kept));
}

double belief(const MassFunction& m, FocalSet set) {
  require_within_frame(m.frame(), set);
  double sum = 0.0;
  for (const MassEntry& e : m.focal_elements()) {
    if (e.set.subset_of(set)) sum += e.mass;
  }
  return sum;
}

double plausibility(const MassFunction& m, FocalSet set) {
  require_within_frame(m.frame(), set);
  double sum = 0.0;
  for (const MassEntry& e : m.focal_elements()) {
    if (e.set.intersects(set)) sum += e.mass;
  }
  return sum;
}

ProbabilityDistribution::ProbabilityDistribution(Frame frame,
                                                 Eigen::VectorXd probs,
                                                 double sum_tolerance)
    : frame_(std::move(frame)), probs_(std::move(probs)) {
  if (probs_.size() != frame_.size()) {
    throw ValidationError(errc::invalid_probability,
                          "distribution size does not match the frame");
  }
  for (Eigen::Index i = 0; i < probs_.size(); ++i) {
    double p = probs_[i];
    if (std::isnan(p) || p < -1e-12 || p > 1.0 + 1e-12) {
      throw ValidationError(errc::invalid_probability,
                            "probability " + std::to_string(p) +
                                " outside [0,1]");
    }
    probs_[i] = std::clamp(p, 0.0, 1.0);
  }
  double sum = probs_.sum();
  if (std::abs(sum - 1.0) > sum_tolerance) {
    throw ValidationError(errc::invalid_probability,
                          "probabilities sum to " + std::to_string(sum) +
                              ", expected 1");
  }
}

int ProbabilityDistribution::argmax() const {
  int best = 0;
  for (int i = 1; i < size(); ++i) {
    if (probs_[i] > probs_[best]) best = i;
  }
  return best;
}

IntervalConstraints::IntervalConstraints(Frame frame, Eigen::VectorXd lower,
                                         Eigen::VectorXd upper)
    : frame_(std::move(frame)),
      lower_(std::move(lower)),
      upper_(std::move(upper)) {
  if (lower_.size() != frame_.size() || upper_.size() != frame_.size()) {
    throw ValidationError(errc::invalid_bounds,
                          "bounds size does not match the frame");
  }
  for (Eigen::Index i = 0; i < lower_.size(); ++i) {
    if (std::isnan(lower_[i]) || std::isnan(upper_[i]) || lower_[i] < -1e-12 ||
        upper_[i] > 1.0 + 1e-12 || lower_[i] > upper_[i] + 1e-12) {
      throw ValidationError(errc::invalid_bounds,
                            "bound interval " + std::to_string(i) +
                                " violates 0 <= lower <= upper <= 1");
    }
    lower_[i] = std::clamp(lower_[i], 0.0, 1.0);
    upper_[i] = std::clamp(upper_[i], lower_[i], 1.0);
  }
  if (lower_.sum() > 1.0 + kMassSumTolerance ||
      upper_.sum() < 1.0 - kMassSumTolerance) {
    throw ValidationError(errc::invalid_bounds,
                          "box does not intersect the probability simplex");
  }
}

bool IntervalConstraints::contains(const Eigen::VectorXd& p,
                                   double slack) const {
  if (p.size() != lower_.size()) return false;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] < lower_[i] - slack || p[i] > upper_[i] + slack) return false;
  }
  return true;
}

IntervalConstraints singleton_bounds(const MassFunction& m) {
  int n = m.frame().size();
  Eigen::VectorXd lower(n);
  Eigen::VectorXd upper(n);
  for (int i = 0; i < n; ++i) {
    FocalSet s = FocalSet::singleton(i);
    lower[i] = belief(m, s);
    upper[i] = plausibility(m, s);
  }
  return IntervalConstraints(m.frame(), std::move(lower), std::move(upper));
}

ProbabilityDistribution as_distribution(const MassFunction& m) {
  if (!m.is_bayesian()) {
    throw ValidationError(errc::invalid_argument,
                          "mass function has non-singleton focal elements");
  }
  Eigen::VectorXd p = Eigen::VectorXd::Zero(m.frame().size());
  for (const MassEntry& e : m.focal_elements()) {
    p[e.set.members().front()] = e.mass;
  }
  return ProbabilityDistribution(m.frame(), std::move(p));
}

}  // namespace dst
