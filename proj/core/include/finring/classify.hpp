#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "finring/structure.hpp"

namespace finring {

/// Decomposition kinds a = e + j: e idempotent, j drawn from the
/// kind's target set, and for the "strongly" kinds e and j commute.
enum class CleanKind {
  clean,
  strongly_clean,
  nil_clean,
  strongly_nil_clean,
  j_clean,
  strongly_j_clean,
  jsharp_clean,
  strongly_jsharp_clean,
  qn_clean,
  strongly_qn_clean,
  deltan_clean,
  strongly_deltan_clean,
};

bool kind_is_strong(CleanKind kind);
const ElemSet& kind_target_set(CleanKind kind, const StructuralSets& sets);
std::string to_string(CleanKind kind);
std::optional<CleanKind> parse_clean_kind(const std::string& name);
std::vector<CleanKind> all_clean_kinds();

struct Decomposition {
  elem element;
  elem idempotent;
  elem complement;  // element - idempotent
  CleanKind kind;
  bool commuting;
};

/// Every decomposition of `a` of the given kind, ordered by idempotent
/// index (the complement is determined by the idempotent).
std::vector<Decomposition> decompositions(const FiniteRing& ring, elem a,
                                          CleanKind kind);

bool element_is_clean_kind(const FiniteRing& ring, const StructuralSets& sets,
                           elem a, CleanKind kind);

/// Per-element kind flags for a whole ring in one pass.
std::vector<std::uint8_t> elementwise_clean_kind(const FiniteRing& ring,
                                                 const StructuralSets& sets,
                                                 CleanKind kind);

bool ring_is_clean_kind(const FiniteRing& ring, CleanKind kind);

/// Witness-based test: some x with x²a = x, ax = xa and a - ax in J#.
/// Equivalent to a having a strongly J#-clean decomposition.
std::optional<elem> strongly_jsharp_witness_x(const FiniteRing& ring, elem a);

/// Number of idempotents e with a - e in the kind's target set
/// (commutation ignored; used by the uniqueness predicates).
std::size_t count_decomposition_idempotents(const FiniteRing& ring,
                                            const StructuralSets& sets, elem a,
                                            CleanKind kind);

// Ring-level predicates beyond the clean family.
bool is_boolean_ring(const FiniteRing& ring, const StructuralSets& sets);
bool is_abelian(const FiniteRing& ring, const StructuralSets& sets);
bool is_local(const FiniteRing& ring, const StructuralSets& sets);
bool is_dedekind_finite(const FiniteRing& ring);
bool is_uniquely_clean(const FiniteRing& ring, const StructuralSets& sets);
bool is_uniquely_jsharp_clean(const FiniteRing& ring, const StructuralSets& sets);
/// U(R) == 1 + X for a structural set X.
bool units_equal_one_plus(const FiniteRing& ring, const ElemSet& units,
                          const ElemSet& xs);

struct RingClassReport {
  std::string ring_label;
  std::size_t order = 0;
  bool trivial = false;

  bool boolean_ring = false;
  bool abelian = false;
  bool local = false;
  bool dedekind_finite = false;
  bool clean = false;
  bool strongly_clean = false;
  bool nil_clean = false;
  bool strongly_nil_clean = false;
  bool j_clean = false;
  bool strongly_j_clean = false;
  bool jsharp_clean = false;
  bool strongly_jsharp_clean = false;
  bool uniquely_clean = false;
  bool uniquely_jsharp_clean = false;
  bool strongly_qn_clean = false;
  bool strongly_deltan_clean = false;
  bool uu = false;
  bool uj = false;
  bool uq = false;
  bool delta_nu = false;
  bool trivial_idempotents_only = false;
  bool two_in_jacobson = false;

  /// Counterexample indices for every false existential flag.
  std::map<std::string, std::vector<std::size_t>> witnesses;
  std::vector<std::string> notes;
};

RingClassReport ring_class_report(const FiniteRing& ring);

std::string to_json(const RingClassReport& report);
std::string to_table(const RingClassReport& report);

}  // namespace finring
