#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finring/codec.hpp"
#include "finring/elem_set.hpp"
#include "finring/group.hpp"
#include "finring/ring.hpp"

namespace finring {

/// A constructed ring together with the codec describing how its
/// element indices decompose structurally.
struct BuiltRing {
  RingPtr ring;
  CodecPtr codec;
};

/// A verified two-sided ideal of a specific ring.
struct IdealSet {
  RingPtr ring;
  ElemSet members;
};

struct QuotientRing {
  BuiltRing built;
  std::vector<elem> project;  // parent element -> coset index
};

struct CornerRing {
  BuiltRing built;
  std::vector<elem> embed;  // corner element -> parent index
};

/// Integers mod n, elements 0..n-1.
BuiltRing ring_Zn(std::size_t n);

/// Componentwise ring; element ordering mixed-radix, first factor most
/// significant.
BuiltRing direct_product(const std::vector<BuiltRing>& factors);

/// k x k matrices (resp. upper triangular matrices) over the base,
/// entries ordered row-major.
BuiltRing matrix_ring(const BuiltRing& base, std::size_t k);
BuiltRing upper_triangular_ring(const BuiltRing& base, std::size_t k);

/// Generalized 2x2 matrix ring with central multiplier s: quadruples
/// (a,b;c,d) with the twisted product
///   (a,b;c,d)(a',b';c',d') = (aa'+s b c', ab'+bd', ca'+dc', s c b'+dd').
BuiltRing generalized_matrix_ring(const BuiltRing& base, elem s);

/// Smallest set containing gens closed under addition, negation and
/// two-sided multiplication by every ring element.
IdealSet ideal_generated_by(const RingPtr& ring, const std::vector<elem>& gens);

bool is_two_sided_ideal(const FiniteRing& ring, const ElemSet& members);

/// Coset ring; canonical representative of each coset is its smallest
/// member index.  Throws NotAnIdeal.
QuotientRing quotient_ring(const BuiltRing& base, const IdealSet& ideal,
                           std::string label = "");

/// Subring e·R·e with identity e.  Throws NotIdempotent.
CornerRing corner_ring(const BuiltRing& base, elem e);

/// Group ring: coefficient vectors indexed by the group, convolution
/// product over the Cayley table.
BuiltRing group_ring(const BuiltRing& base, const GroupPtr& group);

/// The group-ring codec of a built ring, or nullptr when the ring was
/// not produced by group_ring.
const GroupRingCodec* group_ring_codec(const BuiltRing& built);

/// Coefficient-sum homomorphism RG -> R and its kernel.
/// Throw NotAGroupRing when `rg` lacks a group-ring codec.
elem augmentation(const BuiltRing& rg, elem x);
IdealSet augmentation_ideal(const BuiltRing& rg);

/// Construction expressions.
struct ConstructionAst {
  enum class Kind {
    zn,
    product,
    matrix,
    triangular,
    gen_matrix,
    quotient,
    corner,
    group_ring,
  };
  Kind kind = Kind::zn;
  std::size_t number = 0;  // n for zn, k for matrix/triangular, s for
                           // gen_matrix, idempotent index for corner
  std::vector<ConstructionAst> children;
  std::vector<std::size_t> generators;  // quotient generator indices
  std::string group_name;               // builtin name or "@<path>"

  bool operator==(const ConstructionAst& other) const;
};

/// The canonical DSL spelling of an AST; builders use it as the label.
std::string canonical_text(const ConstructionAst& ast);

/// Dispatches to the builders above.  Identical ASTs give identical
/// tables and labels.
BuiltRing eval_ast(const ConstructionAst& ast);

}  // namespace finring
