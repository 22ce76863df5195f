#pragma once

#include <memory>

#include "finring/elem_set.hpp"
#include "finring/ring.hpp"

namespace finring {

/// The structural subsets of a finite ring.
struct StructuralSets {
  ElemSet units;             // U(R)
  ElemSet idempotents;       // Id(R)
  ElemSet nilpotents;        // Nil(R)
  ElemSet jacobson;          // J(R)
  ElemSet j_sharp;           // J#(R) = {z : some power of z lies in J(R)}
  ElemSet quasi_nilpotents;  // QN(R) = {a : 1-ax a unit whenever ax = xa}
  ElemSet delta_nilpotents;  // DN(R) = {a : 1-au a unit for units u with au = ua}

  /// Two-sided inverse of each unit; undefined at non-unit indices.
  std::vector<elem> unit_inverse;
};

using SetsPtr = std::shared_ptr<const StructuralSets>;

ElemSet units(const FiniteRing& ring);
ElemSet idempotents(const FiniteRing& ring);
ElemSet nilpotents(const FiniteRing& ring);

/// {a : 1 - ra is a unit for every r}; verified to be a two-sided
/// ideal, throwing InternalInconsistency otherwise.
ElemSet jacobson_radical(const FiniteRing& ring);

ElemSet j_sharp(const FiniteRing& ring);
ElemSet quasi_nilpotents(const FiniteRing& ring);
ElemSet delta_nilpotents(const FiniteRing& ring);

/// All sets at once, memoized per ring content hash.  Asserts the
/// cross-set inclusions (J and Nil inside J#, J inside QN inside DN,
/// Nil inside QN, unit/radical disjointness) before publishing.
SetsPtr compute_structural_sets(const FiniteRing& ring);

/// Same computation without touching the memo cache.
StructuralSets compute_structural_sets_fresh(const FiniteRing& ring);

void clear_structural_memo();

/// Independent characterization {a : 1 - r*a*s is a unit for all r, s},
/// evaluated as {a : forall r, (r*a) in P} with P = {m : forall s,
/// 1 - m*s a unit} -- the same predicate, two table passes.
ElemSet jacobson_radical_two_sided(const FiniteRing& ring);

}  // namespace finring
