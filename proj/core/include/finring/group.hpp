#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "finring/elem_set.hpp"
#include "finring/errors.hpp"

namespace finring {

/// A finite group given by its Cayley table.  Validated on
/// construction; immutable afterwards.
class GroupTable {
 public:
  static GroupTable make(std::size_t order, std::vector<elem> op, elem identity,
                         std::string label);

  std::size_t order() const { return order_; }
  elem identity() const { return identity_; }
  elem op(elem a, elem b) const { return op_[std::size_t(a) * order_ + b]; }
  elem inverse(elem a) const { return inv_[a]; }
  const std::string& label() const { return label_; }

  /// Multiplicative order of the element.
  std::size_t element_order(elem a) const;

  /// True when every element order is a power of two.
  bool is_2_group() const { return is_2_group_; }

 private:
  GroupTable() = default;

  std::size_t order_ = 0;
  std::vector<elem> op_;
  std::vector<elem> inv_;
  elem identity_ = 0;
  std::string label_;
  bool is_2_group_ = false;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Builtin groups: C1, C2, C3, C4, C2xC2, C6, S3, D4, Q8.
/// Throws UnknownGroup for anything else.
GroupPtr builtin_group(const std::string& name);

std::vector<std::string> builtin_group_names();

/// Wraps GroupTable::make in a shared pointer.
GroupPtr group_from_cayley(std::size_t order, std::vector<elem> op, elem identity,
                           std::string label);

/// Plain-text Cayley import: first line "m identity", then m rows of
/// m indices, whitespace separated.  '#' starts a comment.
GroupPtr group_from_file(const std::string& path);

}  // namespace finring
