#include "dst/frame.hpp"

#include <algorithm>
#include <cctype>

namespace dst {

namespace {

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

}  // namespace

std::optional<int> Frame::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

FocalSet Frame::subset(const std::vector<std::string>& member_labels) const {
  if (member_labels.empty()) {
    throw ValidationError(errc::empty_set, "subset has no members");
  }
  std::uint32_t bits = 0;
  for (const auto& label : member_labels) {
    auto index = index_of(label);
    if (!index) {
      throw ValidationError(errc::unknown_label,
                            "label '" + label + "' is not in the frame");
    }
    bits |= std::uint32_t{1} << *index;
  }
  return FocalSet(bits);
}

std::vector<std::string> Frame::member_labels(FocalSet set) const {
  std::vector<std::string> out;
  for (int i : set.members()) out.push_back(label(i));
  return out;
}

Frame make_frame(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw ValidationError(errc::empty_frame,
                          "a frame needs at least one label");
  }
  if (labels.size() > static_cast<std::size_t>(kMaxFrameSize)) {
    throw CapacityError(errc::frame_too_large,
                        "frame has " + std::to_string(labels.size()) +
                            " labels; at most " +
                            std::to_string(kMaxFrameSize) + " are supported");
  }
  for (const auto& label : labels) {
    if (label.empty() || is_blank(label)) {
      throw ValidationError(errc::blank_label, "blank frame label");
    }
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i] == labels[j]) {
        throw ValidationError(errc::duplicate_label,
                              "duplicate frame label '" + labels[i] + "'");
      }
    }
  }
  return Frame(std::move(labels));
}

const char* errc_name(errc code) {
  switch (code) {
    case errc::empty_frame: return "empty-frame";
    case errc::blank_label: return "blank-label";
    case errc::duplicate_label: return "duplicate-label";
    case errc::empty_set: return "empty-set";
    case errc::foreign_set: return "foreign-set";
    case errc::negative_mass: return "negative-mass";
    case errc::mass_out_of_range: return "mass-out-of-range";
    case errc::duplicate_subset: return "duplicate-subset";
    case errc::mass_sum: return "mass-sum";
    case errc::invalid_probability: return "invalid-probability";
    case errc::invalid_bounds: return "invalid-bounds";
    case errc::invalid_base: return "invalid-base";
    case errc::undefined_transform: return "undefined-transform";
    case errc::non_convergence: return "non-convergence";
    case errc::syntax: return "syntax";
    case errc::unknown_label: return "unknown-label";
    case errc::frame_too_large: return "frame-too-large";
    case errc::budget_exceeded: return "budget-exceeded";
    case errc::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace dst
