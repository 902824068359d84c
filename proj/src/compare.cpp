#include "dst/compare.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

namespace dst {

namespace {

std::string fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

ComparisonRow run_method(const std::string& method, double base,
                         double deng_value,
                         const std::function<ProbabilityDistribution()>& fn) {
  ComparisonRow row;
  row.method = method;
  try {
    ProbabilityDistribution dist = fn();
    row.shannon = shannon_entropy(dist, base).value;
    row.gap = std::abs(deng_value - row.shannon);
    row.argmax = dist.argmax();
    row.distribution = std::move(dist);
  } catch (const Error& err) {
    row.skipped = true;
    row.note = err.what();
  }
  return row;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

ComparisonReport compare(const MassFunction& m, double base, double tol) {
  EntropyValue deng = deng_entropy(m, base);
  ComparisonReport report{m.frame(), deng, singleton_bounds(m), {}};

  report.rows.push_back(run_method("pignistic", base, deng.value,
                                   [&] { return pignistic(m); }));
  report.rows.push_back(run_method("plausibility", base, deng.value,
                                   [&] { return plausibility_transform(m); }));
  report.rows.push_back(
      run_method("relative-belief", base, deng.value,
                 [&] { return relative_belief_transform(m); }));
  report.rows.push_back(
      run_method("proportional", base, deng.value,
                 [&] { return proportional_transform(m); }));

  ComparisonRow match;
  match.method = "entropy-match";
  try {
    TransformResult result = entropy_match(m, {tol, base});
    match.shannon = result.achieved_entropy.value;
    match.gap = result.gap;
    match.argmax = result.distribution.argmax();
    match.note = std::string(regime_name(result.regime));
    match.distribution = std::move(result.distribution);
  } catch (const Error& err) {
    match.skipped = true;
    match.note = err.what();
  }
  report.rows.push_back(std::move(match));
  return report;
}

std::string render_table(const ComparisonReport& report, int digits) {
  std::ostringstream out;
  int n = report.frame.size();
  out << "# base: " << report.deng.base << '\n';
  out << "# deng entropy: " << fixed(report.deng.value, digits) << '\n';
  out << "# singleton bounds:";
  for (int i = 0; i < n; ++i) {
    out << ' ' << report.frame.label(i) << " ["
        << fixed(report.bounds.lower()[i], digits) << ", "
        << fixed(report.bounds.upper()[i], digits) << ']';
  }
  out << '\n';

  std::vector<std::string> headers{"method"};
  for (int i = 0; i < n; ++i) headers.push_back(report.frame.label(i));
  headers.insert(headers.end(), {"entropy", "gap", "argmax", "note"});

  std::vector<std::vector<std::string>> cells;
  for (const ComparisonRow& row : report.rows) {
    std::vector<std::string> line{row.method};
    if (row.skipped) {
      for (int i = 0; i < n; ++i) line.push_back("-");
      line.insert(line.end(), {"-", "-", "-", "skipped: " + row.note});
    } else {
      for (int i = 0; i < n; ++i) {
        line.push_back(fixed((*row.distribution)[i], digits));
      }
      line.push_back(fixed(row.shannon, digits));
      line.push_back(fixed(row.gap, digits));
      line.push_back(report.frame.label(row.argmax));
      line.push_back(row.note);
    }
    cells.push_back(std::move(line));
  }

  std::vector<std::size_t> widths(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) {
    widths[c] = headers[c].size();
    for (const auto& line : cells) widths[c] = std::max(widths[c], line[c].size());
  }
  auto emit_row = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << line[c];
      if (c + 1 < line.size()) {
        out << std::string(widths[c] - line[c].size() + 2, ' ');
      }
    }
    out << '\n';
  };
  emit_row(headers);
  for (const auto& line : cells) emit_row(line);
  return out.str();
}

std::string render_csv(const ComparisonReport& report, int digits,
                       const std::string& file, bool header) {
  std::ostringstream out;
  int n = report.frame.size();
  if (header) {
    if (!file.empty()) out << "file,";
    out << "method";
    for (int i = 0; i < n; ++i) out << ',' << csv_quote(report.frame.label(i));
    out << ",entropy,gap,argmax,note\n";
  }
  for (const ComparisonRow& row : report.rows) {
    if (!file.empty()) out << csv_quote(file) << ',';
    out << csv_quote(row.method);
    if (row.skipped) {
      for (int i = 0; i < n; ++i) out << ',';
      out << ",,,," << csv_quote("skipped: " + row.note);
    } else {
      for (int i = 0; i < n; ++i) out << ',' << fixed((*row.distribution)[i], digits);
      out << ',' << fixed(row.shannon, digits) << ',' << fixed(row.gap, digits)
          << ',' << csv_quote(report.frame.label(row.argmax)) << ','
          << csv_quote(row.note);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace dst
