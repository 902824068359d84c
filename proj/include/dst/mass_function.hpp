// Mass functions (basic probability assignments) over a frame, together with
// the belief and plausibility functions they induce and the per-singleton
// [Bel, Pl] interval box those define.
//
// All types here are immutable after construction and safe to share across
// threads.
#pragma once

#include <Eigen/Dense>
#include <span>
#include <utility>
#include <vector>

#include "dst/frame.hpp"

namespace dst {

// Tolerance on the mass-sum condition; inputs inside it are renormalized
// to sum exactly to one.
inline constexpr double kMassSumTolerance = 1e-9;

struct MassEntry {
  FocalSet set;
  double mass;
};

// Bookkeeping from mass-function construction, surfaced by `validate`.
struct MassValidation {
  double input_sum = 0.0;        // sum of the positive input masses
  double renorm_delta = 0.0;     // input_sum - 1
  bool renormalized = false;
  int dropped_zero_entries = 0;  // zero-mass entries removed on input
};

class MassFunction {
 public:
  const Frame& frame() const { return frame_; }
  // Focal elements in ascending bit-pattern order; masses strictly positive
  // and summing to one.
  std::span<const MassEntry> focal_elements() const { return entries_; }
  int focal_count() const { return static_cast<int>(entries_.size()); }
  // Mass of a subset; zero when the subset is not focal.
  double mass(FocalSet set) const;
  // True when every focal element is a singleton.
  bool is_bayesian() const;

 private:
  friend MassFunction make_mass(Frame frame, std::vector<MassEntry> entries,
                                MassValidation* validation);
  MassFunction(Frame frame, std::vector<MassEntry> entries)
      : frame_(std::move(frame)), entries_(std::move(entries)) {}

  Frame frame_;
  std::vector<MassEntry> entries_;
};

// Validates and builds a mass function. Zero-mass entries are dropped,
// duplicates and out-of-range masses are rejected, and the mass sum must be
// within kMassSumTolerance of one; the stored masses are renormalized to sum
// exactly to one. `validation`, when given, receives the adjustment record.
MassFunction make_mass(Frame frame, std::vector<MassEntry> entries,
                       MassValidation* validation = nullptr);

// Bel(A): total mass of focal elements contained in A.
double belief(const MassFunction& m, FocalSet set);

// Pl(A): total mass of focal elements intersecting A; equals 1 - Bel(~A).
double plausibility(const MassFunction& m, FocalSet set);

// Probability distribution over a frame's elements.
class ProbabilityDistribution {
 public:
  // Entries must lie in [0,1] (tiny negative drift is clamped) and sum to
  // one within sum_tolerance.
  ProbabilityDistribution(Frame frame, Eigen::VectorXd probs,
                          double sum_tolerance = 1e-9);

  const Frame& frame() const { return frame_; }
  const Eigen::VectorXd& probs() const { return probs_; }
  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int index) const { return probs_[index]; }
  // Index of the largest probability; first one on ties.
  int argmax() const;

 private:
  Frame frame_;
  Eigen::VectorXd probs_;
};

// Per-singleton probability box [Bel({w_i}), Pl({w_i})].
class IntervalConstraints {
 public:
  // Requires 0 <= lower <= upper <= 1 componentwise and a non-empty
  // intersection with the simplex: sum(lower) <= 1 <= sum(upper).
  IntervalConstraints(Frame frame, Eigen::VectorXd lower,
                      Eigen::VectorXd upper);

  const Frame& frame() const { return frame_; }
  const Eigen::VectorXd& lower() const { return lower_; }
  const Eigen::VectorXd& upper() const { return upper_; }
  int size() const { return static_cast<int>(lower_.size()); }
  // True when lower == upper exactly on every coordinate (Bayesian input).
  bool is_point() const { return lower_ == upper_; }
  bool contains(const Eigen::VectorXd& p, double slack = 1e-9) const;

 private:
  Frame frame_;
  Eigen::VectorXd lower_;
  Eigen::VectorXd upper_;
};

// The box [Bel({w_i}), Pl({w_i})] for every frame element.
IntervalConstraints singleton_bounds(const MassFunction& m);

// The probability distribution carried by a Bayesian mass function.
ProbabilityDistribution as_distribution(const MassFunction& m);

}  // namespace dst
