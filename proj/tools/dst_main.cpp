// Command-line front end: parse BPA documents, run the probability
// transformations, and print entropy diagnostics. Exit codes: 0 on success,
// 1 for validation/parse/convergence failures, 2 for capacity limits.
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dst/bpa_io.hpp"
#include "dst/compare.hpp"
#include "dst/entropy.hpp"
#include "dst/entropy_match.hpp"
#include "dst/random_bpa.hpp"
#include "dst/transforms.hpp"

namespace {

using namespace dst;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError(errc::invalid_argument,
                          "cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

void print_distribution(const Frame& frame,
                        const ProbabilityDistribution& dist, int digits) {
  std::size_t width = 0;
  for (int i = 0; i < frame.size(); ++i) {
    width = std::max(width, frame.label(i).size());
  }
  for (int i = 0; i < frame.size(); ++i) {
    std::printf("%-*s  %s\n", static_cast<int>(width), frame.label(i).c_str(),
                fixed(dist[i], digits).c_str());
  }
}

int run_transform(const std::string& path, const std::string& method,
                  double tol, double base, int digits) {
  auto [frame, m] = parse_bpa(read_file(path));

  if (method == "entropy-match") {
    // solve before printing so a failure leaves stdout untouched
    TransformResult result = entropy_match(m, {tol, base});
    std::printf("# method: %s\n# base: %g\n", method.c_str(), base);
    std::printf("# deng entropy: %s\n", fixed(result.target_entropy.value, digits).c_str());
    print_distribution(frame, result.distribution, digits);
    std::printf("# shannon entropy: %s\n", fixed(result.achieved_entropy.value, digits).c_str());
    std::printf("# gap: %s\n", fixed(result.gap, digits).c_str());
    std::printf("# regime: %s\n# iterations: %d\n",
                std::string(regime_name(result.regime)).c_str(),
                result.iterations);
    return 0;
  }

  ProbabilityDistribution dist =
      method == "pignistic"         ? pignistic(m)
      : method == "plausibility"    ? plausibility_transform(m)
      : method == "relative-belief" ? relative_belief_transform(m)
                                    : proportional_transform(m);
  double deng = deng_entropy(m, base).value;
  double shannon = shannon_entropy(dist, base).value;
  std::printf("# method: %s\n# base: %g\n", method.c_str(), base);
  std::printf("# deng entropy: %s\n", fixed(deng, digits).c_str());
  print_distribution(frame, dist, digits);
  std::printf("# shannon entropy: %s\n", fixed(shannon, digits).c_str());
  std::printf("# gap: %s\n", fixed(std::abs(deng - shannon), digits).c_str());
  return 0;
}

int run_entropy(const std::string& path, double base, int digits) {
  auto [frame, m] = parse_bpa(read_file(path));
  std::printf("# base: %g\n", base);
  std::printf("deng: %s\n", fixed(deng_entropy(m, base).value, digits).c_str());
  if (m.is_bayesian()) {
    std::printf("shannon: %s\n",
                fixed(shannon_entropy(as_distribution(m), base).value, digits).c_str());
  }
  return 0;
}

int run_bounds(const std::string& path, int digits) {
  auto [frame, m] = parse_bpa(read_file(path));
  IntervalConstraints box = singleton_bounds(m);
  std::size_t width = std::string("element").size();
  for (int i = 0; i < frame.size(); ++i) {
    width = std::max(width, frame.label(i).size());
  }
  std::printf("%-*s  %-*s  %s\n", static_cast<int>(width), "element",
              digits + 2, "belief", "plausibility");
  for (int i = 0; i < frame.size(); ++i) {
    std::printf("%-*s  %s  %s\n", static_cast<int>(width),
                frame.label(i).c_str(),
                fixed(box.lower()[i], digits).c_str(),
                fixed(box.upper()[i], digits).c_str());
  }
  return 0;
}

int run_validate(const std::string& path) {
  BpaDocument doc = parse_bpa_document(read_file(path));
  MassValidation validation;
  auto [frame, m] = realize(doc, &validation);
  std::printf("ok: frame n=%d, %zu focal elements%s%s\n", frame.size(),
              m.focal_elements().size(), doc.name ? ", name: " : "",
              doc.name ? doc.name->c_str() : "");
  if (validation.dropped_zero_entries > 0) {
    std::printf("# dropped %d zero-mass entries\n",
                validation.dropped_zero_entries);
  }
  if (validation.renormalized) {
    std::printf("# renormalized: input sum %.12g (delta %.3g)\n",
                validation.input_sum, validation.renorm_delta);
  }
  return 0;
}

int run_compare(const std::string& path, const std::string& batch_dir,
                bool csv, double base, double tol, int digits) {
  if (batch_dir.empty()) {
    ComparisonReport report = compare(parse_bpa(read_file(path)).second,
                                      base, tol);
    std::fputs((csv ? render_csv(report, digits)
                    : render_table(report, digits)).c_str(),
               stdout);
    return 0;
  }

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(batch_dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw ValidationError(errc::invalid_argument,
                          "no files in '" + batch_dir + "'");
  }
  bool first = true;
  std::vector<std::string> header_labels;
  for (const auto& file : files) {
    ComparisonReport report =
        compare(parse_bpa(read_file(file.string())).second, base, tol);
    if (csv) {
      // the column set depends on the frame, so a fresh header starts a new
      // section whenever the labels change between files
      bool header = report.frame.labels() != header_labels;
      header_labels = report.frame.labels();
      std::fputs(render_csv(report, digits, file.filename().string(), header)
                     .c_str(),
                 stdout);
    } else {
      if (!first) std::printf("\n");
      std::printf("== %s ==\n", file.filename().string().c_str());
      std::fputs(render_table(report, digits).c_str(), stdout);
    }
    first = false;
  }
  return 0;
}

int run_random(int n, int focal, std::uint64_t seed, bool json) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 1; i <= n; ++i) labels.push_back("w" + std::to_string(i));
  Frame frame = make_frame(labels);
  MassFunction m = random_bpa(frame, focal, seed);
  BpaDocument doc = to_document(m);
  std::fputs((json ? emit_json(doc) : emit_text(doc)).c_str(), stdout);
  return 0;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const CapacityError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Dempster-Shafer probability transformations with entropy matching"};
  app.require_subcommand(1);

  std::string file;
  std::string method = "entropy-match";
  std::string batch_dir;
  double tol = 1e-9;
  double base = 2.0;
  int digits = 6;
  bool csv = false;
  bool json = false;
  int n = 3;
  int focal = 3;
  std::uint64_t seed = 0;

  auto add_digits = [&](CLI::App* cmd) {
    cmd->add_option("--digits", digits, "printed decimal places")
        ->check(CLI::Range(1, 17));
  };

  CLI::App* transform =
      app.add_subcommand("transform", "apply a probability transformation");
  transform->add_option("file", file, "BPA document")->required();
  transform
      ->add_option("--method", method,
                   "entropy-match|pignistic|plausibility|relative-belief|"
                   "proportional")
      ->check(CLI::IsMember({"entropy-match", "pignistic", "plausibility",
                             "relative-belief", "proportional"}));
  transform->add_option("--tol", tol, "entropy-gap tolerance");
  transform->add_option("--base", base, "logarithm base");
  add_digits(transform);

  CLI::App* entropy =
      app.add_subcommand("entropy", "Deng entropy of a BPA document");
  entropy->add_option("file", file, "BPA document")->required();
  entropy->add_option("--base", base, "logarithm base");
  add_digits(entropy);

  CLI::App* bounds =
      app.add_subcommand("bounds", "singleton belief/plausibility bounds");
  bounds->add_option("file", file, "BPA document")->required();
  add_digits(bounds);

  CLI::App* validate =
      app.add_subcommand("validate", "check a BPA document");
  validate->add_option("file", file, "BPA document")->required();

  CLI::App* cmp =
      app.add_subcommand("compare", "run every transformation side by side");
  cmp->add_option("file", file, "BPA document");
  cmp->add_option("--batch", batch_dir, "directory of BPA documents");
  cmp->add_flag("--csv", csv, "emit CSV instead of an aligned table");
  cmp->add_option("--base", base, "logarithm base");
  cmp->add_option("--tol", tol, "entropy-match tolerance");
  add_digits(cmp);

  CLI::App* random =
      app.add_subcommand("random", "emit a random BPA document");
  random->add_option("--n", n, "frame size")->required();
  random->add_option("--focal", focal, "number of focal sets")->required();
  random->add_option("--seed", seed, "generator seed")->required();
  random->add_flag("--json", json, "emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    // --help and friends exit 0; real usage errors become exit code 1
    int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }

  if (transform->parsed()) {
    return guarded([&] { return run_transform(file, method, tol, base, digits); });
  }
  if (entropy->parsed()) {
    return guarded([&] { return run_entropy(file, base, digits); });
  }
  if (bounds->parsed()) {
    return guarded([&] { return run_bounds(file, digits); });
  }
  if (validate->parsed()) {
    return guarded([&] { return run_validate(file); });
  }
  if (cmp->parsed()) {
    if (file.empty() && batch_dir.empty()) {
      std::cerr << "error: compare needs a file or --batch directory\n";
      return 1;
    }
    return guarded([&] { return run_compare(file, batch_dir, csv, base, tol, digits); });
  }
  return guarded([&] { return run_random(n, focal, seed, json); });
}
