// Frames of discernment and subsets of them.
//
// A Frame is an ordered list of distinct hypothesis labels. Subsets are
// represented as bit patterns over the label indices, which caps frames at
// 30 elements and keeps all subset arithmetic in machine-word range.
#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dst/errors.hpp"

namespace dst {

inline constexpr int kMaxFrameSize = 30;

// Non-empty subset of a frame, one bit per element index.
class FocalSet {
 public:
  explicit FocalSet(std::uint32_t bits) : bits_(bits) {
    if (bits == 0) {
      throw ValidationError(errc::empty_set,
                            "the empty set cannot carry mass");
    }
  }

  static FocalSet singleton(int index) {
    return FocalSet(std::uint32_t{1} << index);
  }
  static FocalSet full(int frame_size) {
    return FocalSet((std::uint32_t{1} << frame_size) - 1);
  }

  std::uint32_t bits() const { return bits_; }
  int cardinality() const { return std::popcount(bits_); }
  bool contains(int index) const {
    return (bits_ >> index) & std::uint32_t{1};
  }
  bool subset_of(FocalSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  bool intersects(FocalSet other) const { return (bits_ & other.bits_) != 0; }
  bool is_singleton() const { return cardinality() == 1; }
  // True when every member index is below frame_size.
  bool fits(int frame_size) const {
    return bits_ < (std::uint32_t{1} << frame_size);
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  auto operator<=>(const FocalSet&) const = default;

 private:
  std::uint32_t bits_;
};

class Frame {
 public:
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int index) const {
    return labels_[static_cast<std::size_t>(index)];
  }
  std::optional<int> index_of(std::string_view label) const;
  FocalSet full_set() const { return FocalSet::full(size()); }

  // Builds a FocalSet from member labels; unknown labels throw.
  FocalSet subset(const std::vector<std::string>& member_labels) const;
  std::vector<std::string> member_labels(FocalSet set) const;

  bool operator==(const Frame& other) const {
    return labels_ == other.labels_;
  }

 private:
  friend Frame make_frame(std::vector<std::string> labels);
  explicit Frame(std::vector<std::string> labels)
      : labels_(std::move(labels)) {}

  std::vector<std::string> labels_;
};

// Validates and builds a frame: labels must be non-blank, distinct, and at
// most kMaxFrameSize of them. Index order follows input order.
Frame make_frame(std::vector<std::string> labels);

}  // namespace dst
