// Side-by-side comparison of all probability transformations on one BPA:
// each method's distribution, its Shannon entropy, and the gap to the
// input's Deng entropy. A method that is undefined for the input becomes a
// skip row with the reason; the report never throws for per-method failures.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dst/entropy_match.hpp"
#include "dst/transforms.hpp"

namespace dst {

struct ComparisonRow {
  std::string method;
  std::optional<ProbabilityDistribution> distribution;  // empty when skipped
  double shannon = 0.0;
  double gap = 0.0;
  int argmax = -1;
  std::string note;  // regime for entropy-match, or the skip reason
  bool skipped = false;
};

struct ComparisonReport {
  Frame frame;
  EntropyValue deng;  // Deng entropy of the input
  IntervalConstraints bounds;
  std::vector<ComparisonRow> rows;
};

ComparisonReport compare(const MassFunction& m, double base = 2.0,
                         double tol = 1e-9);

// Aligned text table; `digits` controls the printed precision.
std::string render_table(const ComparisonReport& report, int digits = 6);

// CSV rows; when `file` is non-empty it is prepended as a first column.
std::string render_csv(const ComparisonReport& report, int digits = 6,
                       const std::string& file = {}, bool header = true);

}  // namespace dst
