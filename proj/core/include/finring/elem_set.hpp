#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace finring {

/// Element index inside a FiniteRing or GroupTable.  Orders are capped
/// at 65536 so indices always fit.
using elem = std::uint16_t;

/// A subset of {0, ..., universe-1} kept both as a sorted list (for
/// iteration and reporting) and as a byte mask (for O(1) membership).
class ElemSet {
 public:
  ElemSet() = default;

  static ElemSet from_mask(std::vector<std::uint8_t> mask) {
    ElemSet s;
    s.mask_ = std::move(mask);
    for (std::size_t i = 0; i < s.mask_.size(); ++i)
      if (s.mask_[i]) s.members_.push_back(static_cast<elem>(i));
    return s;
  }

  static ElemSet from_members(std::size_t universe, std::vector<elem> members) {
    ElemSet s;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    s.members_ = std::move(members);
    s.mask_.assign(universe, 0);
    for (elem m : s.members_) s.mask_[m] = 1;
    return s;
  }

  static ElemSet empty(std::size_t universe) {
    ElemSet s;
    s.mask_.assign(universe, 0);
    return s;
  }

  bool contains(elem x) const { return mask_[x] != 0; }
  std::size_t size() const { return members_.size(); }
  std::size_t universe_size() const { return mask_.size(); }
  const std::vector<elem>& members() const { return members_; }
  const std::vector<std::uint8_t>& mask() const { return mask_; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const ElemSet& other) const { return members_ == other.members_; }
  bool operator!=(const ElemSet& other) const { return !(*this == other); }

  /// True when every member of this set belongs to `other`.
  bool subset_of(const ElemSet& other) const {
    for (elem m : members_)
      if (!other.contains(m)) return false;
    return true;
  }

 private:
  std::vector<elem> members_;
  std::vector<std::uint8_t> mask_;
};

}  // namespace finring
