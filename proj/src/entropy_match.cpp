#include "dst/entropy_match.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "dst/transforms.hpp"

namespace dst {

namespace {

constexpr int kMaxBisectionIterations = 200;
constexpr double kSumTolerance = 1e-12;
constexpr double kBoundSlack = 1e-12;
// budget on enumerated grid columns before the last axis
constexpr long long kGridBudget = 50'000'000;

Eigen::VectorXd clamp_to_level(const Eigen::VectorXd& lower,
                               const Eigen::VectorXd& upper, double level) {
  return lower.cwiseMax(Eigen::VectorXd::Constant(lower.size(), level))
      .cwiseMin(upper);
}

// Water-filling level search. sum(clamp(c)) is continuous and non-decreasing
// in c, with sum(lower) <= 1 <= sum(upper) guaranteed by the polytope.
Eigen::VectorXd waterfill(const Eigen::VectorXd& lower,
                          const Eigen::VectorXd& upper, int* iterations) {
  double lo = lower.minCoeff();
  double hi = upper.maxCoeff();
  Eigen::VectorXd p = clamp_to_level(lower, upper, lo);
  int used = 0;
  for (; used < kMaxBisectionIterations; ++used) {
    double mid = 0.5 * (lo + hi);
    p = clamp_to_level(lower, upper, mid);
    double sum = p.sum();
    if (std::abs(sum - 1.0) <= kSumTolerance) break;
    if (sum < 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (iterations != nullptr) *iterations = used;
  return p;
}

bool lexicographically_less(const Eigen::VectorXd& a,
                            const Eigen::VectorXd& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

}  // namespace

std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::above_max: return "above-max";
    case Regime::below_min: return "below-min";
    case Regime::interior: return "interior";
    case Regime::point_feasible: return "point-feasible";
  }
  return "unknown";
}

FeasiblePolytope feasible_region(const MassFunction& m) {
  FeasiblePolytope region{singleton_bounds(m)};
  // The pignistic point always satisfies Bel <= BetP <= Pl; if it does not,
  // the bounds themselves are wrong.
  if (!region.constraints().contains(pignistic(m).probs(), 1e-9)) {
    throw std::logic_error(
        "feasible_region: pignistic point outside the singleton box");
  }
  return region;
}

ProbabilityDistribution max_entropy_point(const FeasiblePolytope& region) {
  Eigen::VectorXd p = waterfill(region.lower(), region.upper(), nullptr);
  return ProbabilityDistribution(region.frame(), std::move(p));
}

std::pair<ProbabilityDistribution, EntropyValue> min_entropy_vertex(
    const FeasiblePolytope& region, double base) {
  int n = region.size();
  if (n > kMaxFrameSize) {
    throw CapacityError(errc::frame_too_large,
                        "vertex enumeration supports frames up to " +
                            std::to_string(kMaxFrameSize) + " elements");
  }
  const Eigen::VectorXd& lower = region.lower();
  const Eigen::VectorXd& upper = region.upper();

  double best_entropy = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best;

  std::vector<int> others;
  Eigen::VectorXd point(n);
  // Fix one free index j; the rest sit on a bound. Suffix sums of the
  // others' bounds prune assignments that cannot reach a feasible p_j.
  for (int j = 0; j < n; ++j) {
    others.clear();
    for (int i = 0; i < n; ++i) {
      if (i != j) others.push_back(i);
    }
    int k = static_cast<int>(others.size());
    std::vector<double> min_suffix(k + 1, 0.0), max_suffix(k + 1, 0.0);
    for (int pos = k - 1; pos >= 0; --pos) {
      min_suffix[pos] = min_suffix[pos + 1] + lower[others[pos]];
      max_suffix[pos] = max_suffix[pos + 1] + upper[others[pos]];
    }
    double need_lo = 1.0 - upper[j];  // the others must sum to at least this
    double need_hi = 1.0 - lower[j];  // ... and at most this

    auto descend = [&](auto&& self, int pos, double partial) -> void {
      if (partial + max_suffix[pos] < need_lo - kBoundSlack) return;
      if (partial + min_suffix[pos] > need_hi + kBoundSlack) return;
      if (pos == k) {
        double pj = 1.0 - partial;
        if (pj < lower[j] - kBoundSlack || pj > upper[j] + kBoundSlack) return;
        point[j] = std::clamp(pj, lower[j], upper[j]);
        double entropy = shannon_entropy(point, base);
        if (entropy < best_entropy ||
            (entropy == best_entropy &&
             (best.size() == 0 || lexicographically_less(point, best)))) {
          best_entropy = entropy;
          best = point;
        }
        return;
      }
      int i = others[pos];
      point[i] = lower[i];
      self(self, pos + 1, partial + lower[i]);
      point[i] = upper[i];
      self(self, pos + 1, partial + upper[i]);
    };
    descend(descend, 0, 0.0);
  }
  if (best.size() == 0) {
    // cannot happen for a polytope built from a valid mass function
    throw std::logic_error("min_entropy_vertex: no vertex found");
  }
  return {ProbabilityDistribution(region.frame(), best),
          EntropyValue{best_entropy, base}};
}

TransformResult entropy_match(const MassFunction& m,
                              const EntropyMatchOptions& options) {
  if (!(options.tol > 0.0) || std::isnan(options.tol)) {
    throw ValidationError(errc::invalid_argument, "tolerance must be > 0");
  }
  EntropyValue target = deng_entropy(m, options.base);
  FeasiblePolytope region = feasible_region(m);

  auto finish = [&](ProbabilityDistribution p, Regime regime,
                    int iterations) -> TransformResult {
    EntropyValue achieved = shannon_entropy(p, options.base);
    double gap = std::abs(target.value - achieved.value);
    return TransformResult{std::move(p), target, achieved, gap, regime,
                           iterations};
  };

  if (region.is_point()) {
    return finish(ProbabilityDistribution(region.frame(), region.lower()),
                  Regime::point_feasible, 0);
  }

  int waterfill_iterations = 0;
  Eigen::VectorXd max_point =
      waterfill(region.lower(), region.upper(), &waterfill_iterations);
  double entropy_max = shannon_entropy(max_point, options.base);
  auto [min_vertex, entropy_min] = min_entropy_vertex(region, options.base);

  // Regime thresholds carry the tolerance so boundary noise cannot flip the
  // classification.
  if (target.value >= entropy_max - options.tol) {
    return finish(ProbabilityDistribution(region.frame(), max_point),
                  Regime::above_max, waterfill_iterations);
  }
  if (target.value <= entropy_min.value + options.tol) {
    return finish(std::move(min_vertex), Regime::below_min, 0);
  }

  // Interior: entropy along the segment from the min vertex to the max point
  // passes through the target; "entropy >= target" flips false-to-true once,
  // by concavity.
  const Eigen::VectorXd& low_end = min_vertex.probs();
  Eigen::VectorXd direction = max_point - low_end;
  double lo = 0.0, hi = 1.0;
  double entropy_hi = entropy_max;
  int used = 0;
  for (; used < kMaxBisectionIterations; ++used) {
    if (hi - lo <= 1e-13 && std::abs(entropy_hi - target.value) <= options.tol)
      break;
    double mid = 0.5 * (lo + hi);
    double entropy_mid =
        shannon_entropy(Eigen::VectorXd(low_end + mid * direction),
                        options.base);
    if (entropy_mid >= target.value) {
      hi = mid;
      entropy_hi = entropy_mid;
    } else {
      lo = mid;
    }
  }
  Eigen::VectorXd p = low_end + hi * direction;
  if (std::abs(shannon_entropy(p, options.base) - target.value) >
      options.tol) {
    throw ConvergenceError(errc::non_convergence,
                           "entropy-match bisection did not reach the "
                           "requested tolerance in " +
                               std::to_string(kMaxBisectionIterations) +
                               " iterations; tolerance is too tight for "
                               "double precision");
  }
  return finish(ProbabilityDistribution(region.frame(), std::move(p)),
                Regime::interior, used);
}

TransformResult grid_oracle(const MassFunction& m, double step, double base) {
  int n = m.frame().size();
  if (n > 4) {
    throw CapacityError(errc::frame_too_large,
                        "grid oracle supports frames of up to 4 elements");
  }
  if (std::isnan(step) || !(step > 0.0) || step > 0.1) {
    throw ValidationError(errc::invalid_argument,
                          "grid step must be in (0, 0.1]");
  }
  EntropyValue target = deng_entropy(m, base);
  FeasiblePolytope region = feasible_region(m);
  const Eigen::VectorXd& lower = region.lower();
  const Eigen::VectorXd& upper = region.upper();

  auto result = [&](Eigen::VectorXd p, Regime regime,
                    long long points) -> TransformResult {
    // grid points sum to 1 only within step/2
    ProbabilityDistribution dist(region.frame(), std::move(p),
                                 0.5 * step * (n + 1) + 1e-9);
    EntropyValue achieved = shannon_entropy(dist, base);
    double gap = std::abs(target.value - achieved.value);
    return TransformResult{std::move(dist), target, achieved, gap, regime,
                           static_cast<int>(std::min<long long>(
                               points, std::numeric_limits<int>::max()))};
  };

  if (region.is_point()) {
    // single feasible point, snapped to the grid
    Eigen::VectorXd p(n);
    for (int i = 0; i < n; ++i) p[i] = std::llround(lower[i] / step) * step;
    return result(std::move(p), Regime::point_feasible, 1);
  }

  // per-axis ranges of multiples of `step` inside the box
  std::vector<long long> k_lo(n), k_hi(n);
  long long columns = 1;
  for (int i = 0; i < n; ++i) {
    k_lo[i] = static_cast<long long>(std::ceil((lower[i] - kBoundSlack) / step));
    k_hi[i] = static_cast<long long>(std::floor((upper[i] + kBoundSlack) / step));
    k_lo[i] = std::max<long long>(k_lo[i], 0);
    if (k_lo[i] > k_hi[i]) {
      throw ValidationError(errc::invalid_argument,
                            "no grid point inside the feasible region at "
                            "this step");
    }
    if (i + 1 < n) columns *= (k_hi[i] - k_lo[i] + 1);
    if (columns > kGridBudget) {
      throw CapacityError(errc::budget_exceeded,
                          "grid enumeration budget exceeded; increase the "
                          "step");
    }
  }
  // accepted integer coordinate sums: |S*step - 1| <= step/2
  long long sum_lo =
      static_cast<long long>(std::ceil((1.0 - 0.5 * step - kBoundSlack) / step));
  long long sum_hi =
      static_cast<long long>(std::floor((1.0 + 0.5 * step + kBoundSlack) / step));

  // p*ln(p) at every grid multiple, so entropy evaluation is table lookups
  long long k_top = *std::max_element(k_hi.begin(), k_hi.end());
  std::vector<double> plogp(static_cast<std::size_t>(k_top) + 1, 0.0);
  for (long long k = 1; k <= k_top; ++k) {
    double p = static_cast<double>(k) * step;
    plogp[static_cast<std::size_t>(k)] = p * std::log(p);
  }
  double ln_base = std::log(base);

  double best_gap = std::numeric_limits<double>::infinity();
  std::vector<long long> best_k;
  double grid_entropy_min = std::numeric_limits<double>::infinity();
  double grid_entropy_max = -std::numeric_limits<double>::infinity();
  long long points = 0;

  std::vector<long long> k(n, 0);
  auto visit = [&](auto&& self, int axis, long long partial,
                   double neg_plogp) -> void {
    if (axis == n - 1) {
      for (long long s = sum_lo; s <= sum_hi; ++s) {
        long long last = s - partial;
        if (last < k_lo[axis] || last > k_hi[axis]) continue;
        k[axis] = last;
        double entropy =
            (neg_plogp - plogp[static_cast<std::size_t>(last)]) / ln_base;
        ++points;
        grid_entropy_min = std::min(grid_entropy_min, entropy);
        grid_entropy_max = std::max(grid_entropy_max, entropy);
        double gap = std::abs(target.value - entropy);
        if (gap < best_gap) {
          best_gap = gap;
          best_k = k;
        }
      }
      return;
    }
    for (long long v = k_lo[axis]; v <= k_hi[axis]; ++v) {
      k[axis] = v;
      self(self, axis + 1, partial + v,
           neg_plogp - plogp[static_cast<std::size_t>(v)]);
    }
  };
  visit(visit, 0, 0, 0.0);

  if (best_k.empty()) {
    throw ValidationError(errc::invalid_argument,
                          "no grid point inside the feasible region at this "
                          "step");
  }
  Eigen::VectorXd p(n);
  for (int i = 0; i < n; ++i) p[i] = static_cast<double>(best_k[i]) * step;
  Regime regime = Regime::interior;
  if (target.value >= grid_entropy_max) {
    regime = Regime::above_max;
  } else if (target.value <= grid_entropy_min) {
    regime = Regime::below_min;
  }
  return result(std::move(p), regime, points);
}

}  // namespace dst
