#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finring/elem_set.hpp"
#include "finring/group.hpp"
#include "finring/ring.hpp"

namespace finring {

/// Describes how a constructed ring's element indices map onto
/// structured values (tuples, matrices, coefficient vectors) and
/// renders/parses the documented textual form of each element.
///
/// All composite orderings are mixed-radix with the first component
/// most significant, which keeps indices stable across runs.
class Codec {
 public:
  virtual ~Codec() = default;
  virtual std::string render(elem x) const = 0;
  /// Inverse of render; nullopt when the text does not denote an element.
  virtual std::optional<elem> parse(std::string_view text) const = 0;
};

using CodecPtr = std::shared_ptr<const Codec>;

// Mixed-radix helpers shared by the composite codecs.
std::vector<elem> mixed_radix_decode(std::size_t index, std::size_t digits,
                                     std::size_t base);
std::size_t mixed_radix_encode(const std::vector<elem>& digits, std::size_t base);

class ZnCodec final : public Codec {
 public:
  explicit ZnCodec(std::size_t n) : n_(n) {}
  std::string render(elem x) const override;
  std::optional<elem> parse(std::string_view text) const override;

 private:
  std::size_t n_;
};

class TupleCodec final : public Codec {
 public:
  TupleCodec(std::vector<CodecPtr> factors, std::vector<std::size_t> orders);
  std::string render(elem x) const override;
  std::optional<elem> parse(std::string_view text) const override;

  std::vector<elem> parts(elem x) const;
  elem combine(const std::vector<elem>& parts) const;
  std::size_t factor_count() const { return orders_.size(); }
  std::size_t factor_order(std::size_t i) const { return orders_[i]; }

 private:
  std::vector<CodecPtr> factors_;
  std::vector<std::size_t> orders_;
};

/// Full k x k matrices over a base ring, row-major digits.
class MatrixCodec final : public Codec {
 public:
  MatrixCodec(CodecPtr base, std::size_t base_order, std::size_t k);
  std::string render(elem x) const override;
  std::optional<elem> parse(std::string_view text) const override;

  std::vector<elem> entries(elem x) const;  // k*k entries row-major
  elem combine(const std::vector<elem>& entries) const;
  std::size_t dim() const { return k_; }

 private:
  CodecPtr base_;
  std::size_t base_order_;
  std::size_t k_;
};

/// Upper-triangular k x k matrices; only positions (r,c) with r <= c
/// are stored, row-major among the stored positions.
class TriangularCodec final : public Codec {
 public:
  TriangularCodec(CodecPtr base, std::size_t base_order, std::size_t k);
  std::string render(elem x) const override;
  std::optional<elem> parse(std::string_view text) const override;

  std::vector<elem> stored(elem x) const;
  elem combine(const std::vector<elem>& stored) const;
  std::size_t dim() const { return k_; }

 private:
  CodecPtr base_;
  std::size_t base_order_;
  std::size_t k_;
};

/// Quadruples (a,b;c,d) of a generalized 2x2 matrix ring.
class QuadCodec final : public Codec {
 public:
  QuadCodec(CodecPtr base, std::size_t base_order, elem multiplier);
  std::string render(elem x) const override;
  std::optional<elem> parse(std::string_view text) const override;

  std::array<elem, 4> quad(elem x) const;
  elem combine(const std::array<elem, 4>& q) const;
  elem multiplier() const { return multiplier_; }

 private:
  CodecPtr base_;
  std::size_t base_order_;
  elem multiplier_;
};

/// Coefficient vectors of a group ring, group-element-major.
/// Rendered as a sum of nonzero terms "coef*g<k>".
class GroupRingCodec final : public Codec {
 public:
  GroupRingCodec(CodecPtr base, RingPtr base_ring, GroupPtr group);
  std::string render(elem x) const override;
  std::optional<elem> parse(std::string_view text) const override;

  std::vector<elem> coefficients(elem x) const;
  elem combine(const std::vector<elem>& coeffs) const;
  const GroupTable& group() const { return *group_; }
  const RingPtr& base_ring() const { return base_ring_; }

 private:
  CodecPtr base_;
  RingPtr base_ring_;
  std::size_t base_order_;
  GroupPtr group_;
};

/// Corner and quotient rings: elements named by a parent-ring element
/// (the embedded element resp. the canonical coset representative).
class SubsetCodec final : public Codec {
 public:
  enum class Kind { corner, quotient };
  SubsetCodec(CodecPtr parent, std::size_t parent_order, Kind kind,
              std::vector<elem> representative);
  std::string render(elem x) const override;
  std::optional<elem> parse(std::string_view text) const override;

  elem representative(elem x) const { return representative_[x]; }

 private:
  CodecPtr parent_;
  Kind kind_;
  std::vector<elem> representative_;       // sub index -> parent index
  std::vector<std::optional<elem>> back_;  // parent index -> sub index
};

}  // namespace finring
