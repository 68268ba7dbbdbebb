#include "ibelief/frame.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "ibelief/error.hpp"

namespace ibelief {

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty() || labels_.size() > kMaxFrameSize) {
    throw Error(fmt::format("frame must have between 1 and {} elements, got {}",
                            kMaxFrameSize, labels_.size()));
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw Error("frame labels must be non-empty");
    for (std::size_t j = 0; j < i; ++j) {
      if (labels_[i] == labels_[j]) {
        throw Error(fmt::format("duplicate frame label '{}'", labels_[i]));
      }
    }
  }
}

std::optional<std::size_t> Frame::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

FocalSet Frame::focal_set(std::span<const std::string> labels) const {
  std::uint16_t bits = 0;
  for (const auto& label : labels) {
    auto index = index_of(label);
    if (!index) throw Error(fmt::format("unknown label '{}'", label));
    const auto bit = static_cast<std::uint16_t>(1u << *index);
    if (bits & bit) throw Error(fmt::format("duplicate label '{}'", label));
    bits |= bit;
  }
  return FocalSet(bits);
}

FocalSet Frame::focal_set(std::initializer_list<std::string_view> labels) const {
  std::vector<std::string> owned(labels.begin(), labels.end());
  return focal_set(std::span<const std::string>(owned));
}

std::vector<std::string> Frame::set_labels(FocalSet set) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (set.contains(i)) out.push_back(labels_[i]);
  }
  return out;
}

std::string Frame::format(FocalSet set) const {
  return fmt::format("{{{}}}", fmt::join(set_labels(set), ","));
}

std::vector<FocalSet> Frame::singletons() const {
  std::vector<FocalSet> out;
  out.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) out.push_back(FocalSet::singleton(i));
  return out;
}

}  // namespace ibelief
