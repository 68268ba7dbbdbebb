#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ibelief {

inline constexpr std::size_t kMaxFrameSize = 16;

// Subset of a frame of discernment, one bit per frame element.
class FocalSet {
 public:
  constexpr FocalSet() = default;
  constexpr explicit FocalSet(std::uint16_t bits) : bits_(bits) {}

  static constexpr FocalSet singleton(std::size_t index) {
    return FocalSet(static_cast<std::uint16_t>(1u << index));
  }

  constexpr std::uint16_t bits() const { return bits_; }
  constexpr int cardinality() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_singleton() const { return cardinality() == 1; }
  constexpr bool contains(std::size_t index) const {
    return ((bits_ >> index) & 1u) != 0;
  }
  constexpr bool is_subset_of(FocalSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(FocalSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  friend constexpr FocalSet operator&(FocalSet a, FocalSet b) {
    return FocalSet(static_cast<std::uint16_t>(a.bits_ & b.bits_));
  }
  friend constexpr FocalSet operator|(FocalSet a, FocalSet b) {
    return FocalSet(static_cast<std::uint16_t>(a.bits_ | b.bits_));
  }
  friend constexpr bool operator==(FocalSet, FocalSet) = default;
  // Canonical order: by subset bit value.
  friend constexpr auto operator<=>(FocalSet, FocalSet) = default;

 private:
  std::uint16_t bits_ = 0;
};

// Ordered list of distinct hypothesis labels. The order fixes the bit layout
// of every FocalSet built against this frame.
class Frame {
 public:
  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  FocalSet full() const {
    return FocalSet(static_cast<std::uint16_t>((1u << labels_.size()) - 1u));
  }
  bool owns(FocalSet set) const { return set.is_subset_of(full()); }

  // Builds a set from labels; throws on unknown or repeated labels.
  FocalSet focal_set(std::span<const std::string> labels) const;
  FocalSet focal_set(std::initializer_list<std::string_view> labels) const;

  std::vector<std::string> set_labels(FocalSet set) const;
  // "{A1,A2}" style rendering; the empty set renders as "{}".
  std::string format(FocalSet set) const;

  std::vector<FocalSet> singletons() const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace ibelief
