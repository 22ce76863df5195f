#include "finring/classify.hpp"

#include <sstream>

#include <json.hpp>

namespace finring {

bool kind_is_strong(CleanKind kind) {
  switch (kind) {
    case CleanKind::strongly_clean:
    case CleanKind::strongly_nil_clean:
    case CleanKind::strongly_j_clean:
    case CleanKind::strongly_jsharp_clean:
    case CleanKind::strongly_qn_clean:
    case CleanKind::strongly_deltan_clean:
      return true;
    default:
      return false;
  }
}

const ElemSet& kind_target_set(CleanKind kind, const StructuralSets& sets) {
  switch (kind) {
    case CleanKind::clean:
    case CleanKind::strongly_clean:
      return sets.units;
    case CleanKind::nil_clean:
    case CleanKind::strongly_nil_clean:
      return sets.nilpotents;
    case CleanKind::j_clean:
    case CleanKind::strongly_j_clean:
      return sets.jacobson;
    case CleanKind::jsharp_clean:
    case CleanKind::strongly_jsharp_clean:
      return sets.j_sharp;
    case CleanKind::qn_clean:
    case CleanKind::strongly_qn_clean:
      return sets.quasi_nilpotents;
    case CleanKind::deltan_clean:
    case CleanKind::strongly_deltan_clean:
      return sets.delta_nilpotents;
  }
  return sets.units;  // unreachable
}

std::string to_string(CleanKind kind) {
  switch (kind) {
    case CleanKind::clean: return "clean";
    case CleanKind::strongly_clean: return "strongly-clean";
    case CleanKind::nil_clean: return "nil-clean";
    case CleanKind::strongly_nil_clean: return "strongly-nil-clean";
    case CleanKind::j_clean: return "j-clean";
    case CleanKind::strongly_j_clean: return "strongly-j-clean";
    case CleanKind::jsharp_clean: return "jsharp-clean";
    case CleanKind::strongly_jsharp_clean: return "strongly-jsharp-clean";
    case CleanKind::qn_clean: return "qn-clean";
    case CleanKind::strongly_qn_clean: return "strongly-qn-clean";
    case CleanKind::deltan_clean: return "deltan-clean";
    case CleanKind::strongly_deltan_clean: return "strongly-deltan-clean";
  }
  return "unknown";
}

std::vector<CleanKind> all_clean_kinds() {
  return {CleanKind::clean,          CleanKind::strongly_clean,
          CleanKind::nil_clean,      CleanKind::strongly_nil_clean,
          CleanKind::j_clean,        CleanKind::strongly_j_clean,
          CleanKind::jsharp_clean,   CleanKind::strongly_jsharp_clean,
          CleanKind::qn_clean,       CleanKind::strongly_qn_clean,
          CleanKind::deltan_clean,   CleanKind::strongly_deltan_clean};
}

std::optional<CleanKind> parse_clean_kind(const std::string& name) {
  for (CleanKind k : all_clean_kinds()) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::vector<Decomposition> decompositions(const FiniteRing& ring, elem a,
                                          CleanKind kind) {
  if (a >= ring.order()) throw ElementOutOfRange("element index out of range");
  auto sets = compute_structural_sets(ring);
  const ElemSet& target = kind_target_set(kind, *sets);
  const bool strong = kind_is_strong(kind);
  std::vector<Decomposition> out;
  for (elem e : sets->idempotents) {
    elem j = ring.sub(a, e);
    if (!target.contains(j)) continue;
    bool commuting = ring.mul(e, j) == ring.mul(j, e);
    if (strong && !commuting) continue;
    out.push_back({a, e, j, kind, commuting});
  }
  return out;
}

bool element_is_clean_kind(const FiniteRing& ring, const StructuralSets& sets,
                           elem a, CleanKind kind) {
  const ElemSet& target = kind_target_set(kind, sets);
  const bool strong = kind_is_strong(kind);
  for (elem e : sets.idempotents) {
    elem j = ring.sub(a, e);
    if (!target.contains(j)) continue;
    if (strong && ring.mul(e, j) != ring.mul(j, e)) continue;
    return true;
  }
  return false;
}

std::vector<std::uint8_t> elementwise_clean_kind(const FiniteRing& ring,
                                                 const StructuralSets& sets,
                                                 CleanKind kind) {
  std::vector<std::uint8_t> out(ring.order(), 0);
  for (std::size_t a = 0; a < ring.order(); ++a) {
    out[a] = element_is_clean_kind(ring, sets, static_cast<elem>(a), kind) ? 1 : 0;
  }
  return out;
}

bool ring_is_clean_kind(const FiniteRing& ring, CleanKind kind) {
  auto sets = compute_structural_sets(ring);
  for (std::size_t a = 0; a < ring.order(); ++a) {
    if (!element_is_clean_kind(ring, *sets, static_cast<elem>(a), kind)) return false;
  }
  return true;
}

std::optional<elem> strongly_jsharp_witness_x(const FiniteRing& ring, elem a) {
  auto sets = compute_structural_sets(ring);
  for (std::size_t x = 0; x < ring.order(); ++x) {
    elem xe = static_cast<elem>(x);
    if (ring.mul(ring.mul(xe, xe), a) != xe) continue;
    if (ring.mul(a, xe) != ring.mul(xe, a)) continue;
    elem ax = ring.mul(a, xe);
    if (!sets->j_sharp.contains(ring.sub(a, ax))) continue;
    return xe;
  }
  return std::nullopt;
}

std::size_t count_decomposition_idempotents(const FiniteRing& ring,
                                            const StructuralSets& sets, elem a,
                                            CleanKind kind) {
  const ElemSet& target = kind_target_set(kind, sets);
  std::size_t count = 0;
  for (elem e : sets.idempotents) {
    if (target.contains(ring.sub(a, e))) ++count;
  }
  return count;
}

bool is_boolean_ring(const FiniteRing& ring, const StructuralSets& sets) {
  return sets.idempotents.size() == ring.order();
}

bool is_abelian(const FiniteRing& ring, const StructuralSets& sets) {
  for (elem e : sets.idempotents) {
    for (std::size_t r = 0; r < ring.order(); ++r) {
      if (ring.mul(e, static_cast<elem>(r)) != ring.mul(static_cast<elem>(r), e)) {
        return false;
      }
    }
  }
  return true;
}

bool is_local(const FiniteRing& ring, const StructuralSets& sets) {
  // Local means nonunits = J(R); fails for the trivial ring, which has
  // no maximal ideal.
  return sets.units.size() + sets.jacobson.size() == ring.order();
}

bool is_dedekind_finite(const FiniteRing& ring) {
  for (std::size_t a = 0; a < ring.order(); ++a) {
    for (std::size_t b = 0; b < ring.order(); ++b) {
      if (ring.mul(static_cast<elem>(a), static_cast<elem>(b)) == ring.one() &&
          ring.mul(static_cast<elem>(b), static_cast<elem>(a)) != ring.one()) {
        return false;
      }
    }
  }
  return true;
}

bool is_uniquely_clean(const FiniteRing& ring, const StructuralSets& sets) {
  for (std::size_t a = 0; a < ring.order(); ++a) {
    if (count_decomposition_idempotents(ring, sets, static_cast<elem>(a),
                                        CleanKind::clean) != 1) {
      return false;
    }
  }
  return true;
}

bool is_uniquely_jsharp_clean(const FiniteRing& ring, const StructuralSets& sets) {
  for (std::size_t a = 0; a < ring.order(); ++a) {
    if (count_decomposition_idempotents(ring, sets, static_cast<elem>(a),
                                        CleanKind::jsharp_clean) != 1) {
      return false;
    }
  }
  return true;
}

bool units_equal_one_plus(const FiniteRing& ring, const ElemSet& units,
                          const ElemSet& xs) {
  if (units.size() != xs.size()) return false;
  for (elem x : xs) {
    if (!units.contains(ring.add(ring.one(), x))) return false;
  }
  return true;
}

namespace {

// First element failing the kind, if any.
std::optional<std::size_t> first_non_kind(const FiniteRing& ring,
                                          const StructuralSets& sets, CleanKind kind) {
  for (std::size_t a = 0; a < ring.order(); ++a) {
    if (!element_is_clean_kind(ring, sets, static_cast<elem>(a), kind)) return a;
  }
  return std::nullopt;
}

std::optional<std::size_t> first_non_unique(const FiniteRing& ring,
                                            const StructuralSets& sets,
                                            CleanKind kind) {
  for (std::size_t a = 0; a < ring.order(); ++a) {
    if (count_decomposition_idempotents(ring, sets, static_cast<elem>(a), kind) != 1) {
      return a;
    }
  }
  return std::nullopt;
}

// x in exactly one of U(R), 1+X.
std::optional<std::size_t> one_plus_mismatch(const FiniteRing& ring,
                                             const ElemSet& units, const ElemSet& xs) {
  std::vector<std::uint8_t> one_plus(ring.order(), 0);
  for (elem x : xs) one_plus[ring.add(ring.one(), x)] = 1;
  for (std::size_t v = 0; v < ring.order(); ++v) {
    if (one_plus[v] != (units.contains(static_cast<elem>(v)) ? 1 : 0)) return v;
  }
  return std::nullopt;
}

}  // namespace

RingClassReport ring_class_report(const FiniteRing& ring) {
  auto sets_ptr = compute_structural_sets(ring);
  const StructuralSets& sets = *sets_ptr;
  RingClassReport rep;
  rep.ring_label = ring.label();
  rep.order = ring.order();
  rep.trivial = ring.is_trivial();

  auto set_kind_flag = [&](bool& flag, const char* name, CleanKind kind) {
    auto bad = first_non_kind(ring, sets, kind);
    flag = !bad.has_value();
    if (bad) rep.witnesses[name] = {*bad};
  };

  // boolean
  rep.boolean_ring = true;
  for (std::size_t a = 0; a < ring.order(); ++a) {
    if (!sets.idempotents.contains(static_cast<elem>(a))) {
      rep.boolean_ring = false;
      rep.witnesses["boolean_ring"] = {a};
      break;
    }
  }

  rep.abelian = true;
  for (elem e : sets.idempotents) {
    for (std::size_t r = 0; r < ring.order() && rep.abelian; ++r) {
      if (ring.mul(e, static_cast<elem>(r)) != ring.mul(static_cast<elem>(r), e)) {
        rep.abelian = false;
        rep.witnesses["abelian"] = {e, r};
      }
    }
    if (!rep.abelian) break;
  }

  rep.local = is_local(ring, sets);
  if (!rep.local) {
    for (std::size_t a = 0; a < ring.order(); ++a) {
      elem ae = static_cast<elem>(a);
      if (!sets.units.contains(ae) && !sets.jacobson.contains(ae)) {
        rep.witnesses["local"] = {a};
        break;
      }
    }
  }

  rep.dedekind_finite = true;
  for (std::size_t a = 0; a < ring.order() && rep.dedekind_finite; ++a) {
    for (std::size_t b = 0; b < ring.order(); ++b) {
      if (ring.mul(static_cast<elem>(a), static_cast<elem>(b)) == ring.one() &&
          ring.mul(static_cast<elem>(b), static_cast<elem>(a)) != ring.one()) {
        rep.dedekind_finite = false;
        rep.witnesses["dedekind_finite"] = {a, b};
        break;
      }
    }
  }

  set_kind_flag(rep.clean, "clean", CleanKind::clean);
  set_kind_flag(rep.strongly_clean, "strongly_clean", CleanKind::strongly_clean);
  set_kind_flag(rep.nil_clean, "nil_clean", CleanKind::nil_clean);
  set_kind_flag(rep.strongly_nil_clean, "strongly_nil_clean",
                CleanKind::strongly_nil_clean);
  set_kind_flag(rep.j_clean, "j_clean", CleanKind::j_clean);
  set_kind_flag(rep.strongly_j_clean, "strongly_j_clean", CleanKind::strongly_j_clean);
  set_kind_flag(rep.jsharp_clean, "jsharp_clean", CleanKind::jsharp_clean);
  set_kind_flag(rep.strongly_jsharp_clean, "strongly_jsharp_clean",
                CleanKind::strongly_jsharp_clean);
  set_kind_flag(rep.strongly_qn_clean, "strongly_qn_clean", CleanKind::strongly_qn_clean);
  set_kind_flag(rep.strongly_deltan_clean, "strongly_deltan_clean",
                CleanKind::strongly_deltan_clean);

  if (auto bad = first_non_unique(ring, sets, CleanKind::clean)) {
    rep.uniquely_clean = false;
    rep.witnesses["uniquely_clean"] = {*bad};
  } else {
    rep.uniquely_clean = true;
  }
  if (auto bad = first_non_unique(ring, sets, CleanKind::jsharp_clean)) {
    rep.uniquely_jsharp_clean = false;
    rep.witnesses["uniquely_jsharp_clean"] = {*bad};
  } else {
    rep.uniquely_jsharp_clean = true;
  }

  auto one_plus_flag = [&](bool& flag, const char* name, const ElemSet& xs) {
    auto bad = one_plus_mismatch(ring, sets.units, xs);
    flag = !bad.has_value();
    if (bad) rep.witnesses[name] = {*bad};
  };
  one_plus_flag(rep.uu, "uu", sets.nilpotents);
  one_plus_flag(rep.uj, "uj", sets.jacobson);
  one_plus_flag(rep.uq, "uq", sets.quasi_nilpotents);
  one_plus_flag(rep.delta_nu, "delta_nu", sets.delta_nilpotents);

  rep.trivial_idempotents_only = true;
  for (elem e : sets.idempotents) {
    if (e != ring.zero() && e != ring.one()) {
      rep.trivial_idempotents_only = false;
      rep.witnesses["trivial_idempotents_only"] = {std::size_t(e)};
      break;
    }
  }

  elem two = ring.add(ring.one(), ring.one());
  rep.two_in_jacobson = sets.jacobson.contains(two);
  if (!rep.two_in_jacobson) rep.witnesses["two_in_jacobson"] = {std::size_t(two)};

  rep.notes.push_back(
      "uq means U(R) = 1 + QN(R); the mirrored identity 1 + U(R) = QN(R) is not "
      "what is tested");
  if (rep.trivial) {
    rep.notes.push_back("trivial ring (0 = 1): the clean-family flags hold vacuously");
  }
  return rep;
}

std::string to_json(const RingClassReport& rep) {
  nlohmann::json j;
  j["ring"] = rep.ring_label;
  j["order"] = rep.order;
  j["trivial"] = rep.trivial;
  nlohmann::json flags;
  flags["boolean_ring"] = rep.boolean_ring;
  flags["abelian"] = rep.abelian;
  flags["local"] = rep.local;
  flags["dedekind_finite"] = rep.dedekind_finite;
  flags["clean"] = rep.clean;
  flags["strongly_clean"] = rep.strongly_clean;
  flags["nil_clean"] = rep.nil_clean;
  flags["strongly_nil_clean"] = rep.strongly_nil_clean;
  flags["j_clean"] = rep.j_clean;
  flags["strongly_j_clean"] = rep.strongly_j_clean;
  flags["jsharp_clean"] = rep.jsharp_clean;
  flags["strongly_jsharp_clean"] = rep.strongly_jsharp_clean;
  flags["uniquely_clean"] = rep.uniquely_clean;
  flags["uniquely_jsharp_clean"] = rep.uniquely_jsharp_clean;
  flags["strongly_qn_clean"] = rep.strongly_qn_clean;
  flags["strongly_deltan_clean"] = rep.strongly_deltan_clean;
  flags["uu"] = rep.uu;
  flags["uj"] = rep.uj;
  flags["uq"] = rep.uq;
  flags["delta_nu"] = rep.delta_nu;
  flags["trivial_idempotents_only"] = rep.trivial_idempotents_only;
  flags["two_in_jacobson"] = rep.two_in_jacobson;
  j["flags"] = flags;
  j["witnesses"] = rep.witnesses;
  j["notes"] = rep.notes;
  return j.dump();
}

std::string to_table(const RingClassReport& rep) {
  std::ostringstream os;
  os << "ring: " << rep.ring_label << " (order " << rep.order << ")";
  if (rep.trivial) os << " [trivial]";
  os << "\n";
  auto row = [&](const char* name, bool v, const char* key) {
    os << "  " << name << ": " << (v ? "yes" : "no");
    auto it = rep.witnesses.find(key);
    if (it != rep.witnesses.end()) {
      os << "  (witness:";
      for (auto w : it->second) os << " " << w;
      os << ")";
    }
    os << "\n";
  };
  row("boolean", rep.boolean_ring, "boolean_ring");
  row("abelian", rep.abelian, "abelian");
  row("local", rep.local, "local");
  row("dedekind-finite", rep.dedekind_finite, "dedekind_finite");
  row("clean", rep.clean, "clean");
  row("strongly clean", rep.strongly_clean, "strongly_clean");
  row("nil-clean", rep.nil_clean, "nil_clean");
  row("strongly nil-clean", rep.strongly_nil_clean, "strongly_nil_clean");
  row("j-clean", rep.j_clean, "j_clean");
  row("strongly j-clean", rep.strongly_j_clean, "strongly_j_clean");
  row("jsharp-clean", rep.jsharp_clean, "jsharp_clean");
  row("strongly jsharp-clean", rep.strongly_jsharp_clean, "strongly_jsharp_clean");
  row("uniquely clean", rep.uniquely_clean, "uniquely_clean");
  row("uniquely jsharp-clean", rep.uniquely_jsharp_clean, "uniquely_jsharp_clean");
  row("strongly qn-clean", rep.strongly_qn_clean, "strongly_qn_clean");
  row("strongly deltan-clean", rep.strongly_deltan_clean, "strongly_deltan_clean");
  row("uu", rep.uu, "uu");
  row("uj", rep.uj, "uj");
  row("uq", rep.uq, "uq");
  row("delta-nu", rep.delta_nu, "delta_nu");
  row("trivial idempotents only", rep.trivial_idempotents_only,
      "trivial_idempotents_only");
  row("two in jacobson", rep.two_in_jacobson, "two_in_jacobson");
  return os.str();
}

}  // namespace finring
