#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finring/elem_set.hpp"
#include "finring/errors.hpp"

namespace finring {

/// Hard ceiling on ring orders: element indices are 16-bit.
inline constexpr std::size_t kMaxOrder = 65536;

/// Default cap on constructed ring orders.  Two order² index tables at
/// the default cap take about 64 MiB.
inline constexpr std::size_t kDefaultOrderCap = 4096;

std::size_t order_cap();
void set_order_cap(std::size_t cap);  // throws SizeExceeded above kMaxOrder

/// A finite unital ring given by full addition and multiplication
/// tables over element indices 0..n-1.  Instances are immutable after
/// construction and can be shared freely across threads.
class FiniteRing {
 public:
  /// Validates every ring axiom before accepting the tables; throws
  /// AxiomViolation with a concrete witness triple otherwise.
  static FiniteRing make(std::size_t order, std::vector<elem> add,
                         std::vector<elem> mul, elem zero, elem one,
                         std::string label);

  /// Skips axiom validation.  Meant for the harness's mutation tests;
  /// everything else goes through make().
  static FiniteRing make_unchecked(std::size_t order, std::vector<elem> add,
                                   std::vector<elem> mul, elem zero, elem one,
                                   std::string label);

  std::size_t order() const { return order_; }
  elem zero() const { return zero_; }
  elem one() const { return one_; }
  const std::string& label() const { return label_; }
  bool is_trivial() const { return order_ == 1; }

  elem add(elem a, elem b) const { return add_[std::size_t(a) * order_ + b]; }
  elem mul(elem a, elem b) const { return mul_[std::size_t(a) * order_ + b]; }
  elem neg(elem a) const { return neg_[a]; }
  elem sub(elem a, elem b) const { return add(a, neg_[b]); }

  /// a^k for k >= 1.
  elem pow(elem a, std::size_t k) const;

  std::span<const elem> add_table() const { return add_; }
  std::span<const elem> mul_table() const { return mul_; }

  /// SHA-256 over (order, zero, one, add, mul); keys the set caches.
  const std::string& content_hash() const { return hash_; }

 private:
  FiniteRing() = default;

  std::size_t order_ = 0;
  std::vector<elem> add_;
  std::vector<elem> mul_;
  std::vector<elem> neg_;
  elem zero_ = 0;
  elem one_ = 0;
  std::string label_;
  std::string hash_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// A single element of a specific ring.
struct ElementRef {
  const FiniteRing* ring;
  elem index;
};

/// Checks all ring axioms on raw tables and returns the first
/// violation found, or nullopt when the tables form a unital ring.
/// Exhaustive triple scans are used up to order 256; above that the
/// associativity and distributivity laws are verified through an
/// additive generating set, which is equivalent for full tables.
std::optional<AxiomWitness> find_axiom_violation(std::size_t order,
                                                 const std::vector<elem>& add,
                                                 const std::vector<elem>& mul,
                                                 elem zero, elem one);

/// Distinct values a, a², a³, ... stopping before the first repeat.
std::vector<elem> power_orbit(const FiniteRing& ring, elem a);
inline std::vector<elem> power_orbit(ElementRef a) { return power_orbit(*a.ring, a.index); }

/// {x : xa = 0} and {x : ax = 0}.
ElemSet left_annihilator(const FiniteRing& ring, elem a);
ElemSet right_annihilator(const FiniteRing& ring, elem a);

/// {a : ar = ra for every r}.
ElemSet center(const FiniteRing& ring);

}  // namespace finring
