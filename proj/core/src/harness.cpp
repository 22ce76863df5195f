#include "finring/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace finring {

namespace {

const char* kDefaultCatalog =
    "# finring default verification catalog\n"
    "Z1\n"
    "Z2\n"
    "Z3\n"
    "Z4\n"
    "Z6\n"
    "Z8\n"
    "prod(Z2,Z2)\n"
    "prod(Z2,Z4)\n"
    "prod(Z4,Z4)\n"
    "M2(Z2)\n"
    "T2(Z2)\n"
    "T2(Z4)\n"
    "T3(Z2)\n"
    "K(Z4,2)\n"
    "K(Z4,0)\n"
    "K(Z2,1)\n"
    "K(Z8,2)\n"
    "GR(Z2,C2)\n"
    "GR(Z4,C2)\n"
    "GR(Z2,C4)\n"
    "GR(Z2,C2xC2)\n"
    "GR(Z2,C3)\n"
    "GR(Z4,C3)\n"
    "GR(Z2,S3)\n";

bool all_of_flags(const std::vector<std::uint8_t>& flags) {
  for (auto f : flags)
    if (!f) return false;
  return true;
}

Witness make_witness(std::initializer_list<std::pair<const char*, std::int64_t>> slots,
                     std::string tag = "") {
  Witness w;
  for (const auto& [k, v] : slots) w.slots.emplace_back(k, v);
  w.tag = std::move(tag);
  return w;
}

struct Outcome {
  CheckStatus status = CheckStatus::pass;
  std::string reason;
  std::optional<Witness> witness;
  std::string note;

  static Outcome pass(std::string note = "") {
    Outcome o;
    o.note = std::move(note);
    return o;
  }
  static Outcome fail(Witness w, std::string note = "") {
    Outcome o;
    o.status = CheckStatus::fail;
    o.witness = std::move(w);
    o.note = std::move(note);
    return o;
  }
  static Outcome skip(std::string reason, std::string note = "") {
    Outcome o;
    o.status = CheckStatus::skipped;
    o.reason = std::move(reason);
    o.note = std::move(note);
    return o;
  }
};

struct Check {
  std::string id;
  std::string summary;
  CheckSort sort;
  std::function<Outcome(const Subject&)> run;
  std::function<bool(const Subject&, const Witness&)> replay;
};

// ---------------------------------------------------------------------------
// shared helpers

elem two_of(const FiniteRing& R) { return R.add(R.one(), R.one()); }

bool units_eq_one_plus_jsharp(const Subject& s) {
  return units_equal_one_plus(s.ring(), s.sets().units, s.sets().j_sharp);
}

std::vector<std::uint8_t> one_plus_mask(const FiniteRing& R, const ElemSet& xs) {
  std::vector<std::uint8_t> m(R.order(), 0);
  for (elem x : xs) m[R.add(R.one(), x)] = 1;
  return m;
}

// Partner products used by the product-law checks.
struct PartnerProduct {
  std::string label;
  BuiltRing built;
  std::vector<BuiltRing> factors;  // subject first
};

std::vector<std::size_t> partner_shape(int which) {
  switch (which) {
    case 0: return {4};      // R x Z4
    case 1: return {6};      // R x Z6
    default: return {2, 4};  // R x Z2 x Z4
  }
}

std::optional<PartnerProduct> build_partner(const Subject& s, int which) {
  std::vector<BuiltRing> factors{s.built()};
  std::string label = "prod(" + s.expr();
  for (std::size_t n : partner_shape(which)) {
    factors.push_back(ring_Zn(n));
    label += ",Z" + std::to_string(n);
  }
  label += ")";
  try {
    PartnerProduct p{label, direct_product(factors), factors};
    return p;
  } catch (const SizeExceeded&) {
    return std::nullopt;
  }
}

// Ideals arising as closures of generator subsets, deduplicated.
struct GeneratedIdeal {
  std::vector<elem> gens;
  ElemSet members;
};

void push_unique_ideal(std::vector<GeneratedIdeal>& out, GeneratedIdeal ideal) {
  for (const auto& have : out) {
    if (have.members == ideal.members) return;
  }
  out.push_back(std::move(ideal));
}

// Subsets of J(R): every subset when |J| <= 12, otherwise singletons
// plus the whole radical.  Complete for the default catalog's small
// rings; a documented completeness boundary beyond that.
std::vector<GeneratedIdeal> radical_subset_ideals(const Subject& s) {
  const auto& J = s.sets().jacobson.members();
  std::vector<GeneratedIdeal> out;
  push_unique_ideal(out, {{}, ideal_generated_by(s.built().ring, {}).members});
  if (J.size() <= 12) {
    const std::size_t total = std::size_t(1) << J.size();
    for (std::size_t bits = 1; bits < total; ++bits) {
      std::vector<elem> gens;
      for (std::size_t i = 0; i < J.size(); ++i) {
        if (bits & (std::size_t(1) << i)) gens.push_back(J[i]);
      }
      push_unique_ideal(out, {gens, ideal_generated_by(s.built().ring, gens).members});
    }
  } else {
    for (elem j : J) {
      push_unique_ideal(out, {{j}, ideal_generated_by(s.built().ring, {j}).members});
    }
    std::vector<elem> whole(J.begin(), J.end());
    push_unique_ideal(out, {whole, ideal_generated_by(s.built().ring, whole).members});
  }
  return out;
}

// Ideal lattice approximation for the six-way equivalence: closures of
// the empty set, singletons, pairs, and radical subsets.
std::vector<GeneratedIdeal> small_ideal_lattice(const Subject& s) {
  const FiniteRing& R = s.ring();
  std::vector<GeneratedIdeal> out = radical_subset_ideals(s);
  for (std::size_t a = 0; a < R.order(); ++a) {
    push_unique_ideal(out, {{static_cast<elem>(a)},
                            ideal_generated_by(s.built().ring, {static_cast<elem>(a)}).members});
  }
  for (std::size_t a = 0; a < R.order(); ++a) {
    for (std::size_t b = a + 1; b < R.order(); ++b) {
      std::vector<elem> gens{static_cast<elem>(a), static_cast<elem>(b)};
      push_unique_ideal(out, {gens, ideal_generated_by(s.built().ring, gens).members});
    }
  }
  return out;
}

BuiltRing quotient_by(const Subject& s, const GeneratedIdeal& ideal,
                      const std::string& label) {
  IdealSet is{s.built().ring, ideal.members};
  return quotient_ring(s.built(), is, label).built;
}

bool ring_is_uniquely_clean(const FiniteRing& R) {
  auto sets = compute_structural_sets(R);
  return is_uniquely_clean(R, *sets);
}

// Conjugation helper: P x P^{-1}.
elem conjugate(const FiniteRing& R, const StructuralSets& S, elem p, elem x) {
  return R.mul(R.mul(p, x), S.unit_inverse[p]);
}

const QuadCodec* quad_codec(const Subject& s) {
  return dynamic_cast<const QuadCodec*>(s.built().codec.get());
}

// ---------------------------------------------------------------------------
// the checks

std::vector<Check> build_registry();

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = build_registry();
  return checks;
}

std::vector<Check> build_registry() {
  std::vector<Check> checks;

  // CHK-axioms: the tables satisfy every ring axiom.
  checks.push_back(Check{
      "CHK-axioms",
      "table passes full ring-axiom validation",
      CheckSort::ring,
      [](const Subject& s) {
        const FiniteRing& R = s.ring();
        std::vector<elem> add(R.add_table().begin(), R.add_table().end());
        std::vector<elem> mul(R.mul_table().begin(), R.mul_table().end());
        if (auto w = find_axiom_violation(R.order(), add, mul, R.zero(), R.one())) {
          return Outcome::fail(
              make_witness({{"i", std::int64_t(w->triple[0])},
                            {"j", std::int64_t(w->triple[1])},
                            {"k", std::int64_t(w->triple[2])}},
                           to_string(w->axiom)),
              w->detail);
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness& w) {
        const FiniteRing& R = s.ring();
        std::vector<elem> add(R.add_table().begin(), R.add_table().end());
        std::vector<elem> mul(R.mul_table().begin(), R.mul_table().end());
        auto v = find_axiom_violation(R.order(), add, mul, R.zero(), R.one());
        return v.has_value() && to_string(v->axiom) == w.tag;
      }});

  // CHK-closeprod-1: a in J#, b in J  =>  a+b in J#.
  checks.push_back(Check{
      "CHK-closeprod-1",
      "J# is stable under adding radical elements",
      CheckSort::ring,
      [](const Subject& s) {
        const FiniteRing& R = s.ring();
        const auto& S = s.sets();
        for (elem a : S.j_sharp) {
          for (elem b : S.jacobson) {
            if (!S.j_sharp.contains(R.add(a, b))) {
              return Outcome::fail(make_witness({{"a", a}, {"b", b}}));
            }
          }
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness& w) {
        const FiniteRing& R = s.ring();
        const auto& S = s.sets();
        elem a = static_cast<elem>(*w.get("a")), b = static_cast<elem>(*w.get("b"));
        return S.j_sharp.contains(a) && S.jacobson.contains(b) &&
               !S.j_sharp.contains(R.add(a, b));
      }});

  // CHK-closeprod-2: a in J#  <=>  -a in J#.
  checks.push_back(Check{
      "CHK-closeprod-2",
      "J# is symmetric under negation",
      CheckSort::ring,
      [](const Subject& s) {
        const FiniteRing& R = s.ring();
        const auto& S = s.sets();
        for (std::size_t a = 0; a < R.order(); ++a) {
          if (S.j_sharp.contains(static_cast<elem>(a)) !=
              S.j_sharp.contains(R.neg(static_cast<elem>(a)))) {
            return Outcome::fail(make_witness({{"a", std::int64_t(a)}}));
          }
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness& w) {
        elem a = static_cast<elem>(*w.get("a"));
        const auto& S = s.sets();
        return S.j_sharp.contains(a) != S.j_sharp.contains(s.ring().neg(a));
      }});

  // CHK-closeprod-3: J# of a product is the product of the J#s.
  auto closeprod3_eval = [](const Subject& s, int which,
                            std::optional<elem>* bad) -> std::optional<bool> {
    auto partner = build_partner(s, which);
    if (!partner) return std::nullopt;
    const FiniteRing& P = *partner->built.ring;
    auto psets = compute_structural_sets(P);
    const auto* codec = dynamic_cast<const TupleCodec*>(partner->built.codec.get());
    for (std::size_t x = 0; x < P.order(); ++x) {
      auto parts = codec->parts(static_cast<elem>(x));
      bool componentwise = true;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        auto fsets = compute_structural_sets(*partner->factors[i].ring);
        if (!fsets->j_sharp.contains(parts[i])) {
          componentwise = false;
          break;
        }
      }
      if (psets->j_sharp.contains(static_cast<elem>(x)) != componentwise) {
        if (bad) *bad = static_cast<elem>(x);
        return false;
      }
    }
    return true;
  };
  checks.push_back(Check{
      "CHK-closeprod-3",
      "J# of a direct product is computed componentwise",
      CheckSort::ring,
      [closeprod3_eval](const Subject& s) {
        bool any = false;
        for (int which : {0, 1, 2}) {
          std::optional<elem> bad;
          auto r = closeprod3_eval(s, which, &bad);
          if (!r) continue;
          any = true;
          if (!*r) {
            return Outcome::fail(
                make_witness({{"which", which}, {"element", *bad}}, "product-mismatch"));
          }
        }
        if (!any) return Outcome::skip("partner products exceed the order cap");
        return Outcome::pass();
      },
      [closeprod3_eval](const Subject& s, const Witness& w) {
        std::optional<elem> bad;
        auto r = closeprod3_eval(s, int(*w.get("which")), &bad);
        return r.has_value() && !*r && bad == static_cast<elem>(*w.get("element"));
      }});

  // CHK-closeprod-4: J# is stable under unit conjugation.
  checks.push_back(Check{
      "CHK-closeprod-4",
      "J# is stable under unit conjugation",
      CheckSort::ring,
      [](const Subject& s) {
        const FiniteRing& R = s.ring();
        const auto& S = s.sets();
        for (elem a : S.j_sharp) {
          for (elem u : S.units) {
            if (!S.j_sharp.contains(conjugate(R, S, u, a))) {
              return Outcome::fail(make_witness({{"a", a}, {"u", u}}));
            }
          }
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness& w) {
        const auto& S = s.sets();
        elem a = static_cast<elem>(*w.get("a")), u = static_cast<elem>(*w.get("u"));
        return S.j_sharp.contains(a) && S.units.contains(u) &&
               !S.j_sharp.contains(conjugate(s.ring(), S, u, a));
      }});

  // CHK-product: a product is strongly J#-clean iff every factor is.
  auto product_eval = [](const Subject& s, int which,
                         std::string* label) -> std::optional<std::pair<bool, bool>> {
    auto partner = build_partner(s, which);
    if (!partner) return std::nullopt;
    if (label) *label = partner->label;
    bool lhs = ring_is_clean_kind(*partner->built.ring, CleanKind::strongly_jsharp_clean);
    bool rhs = true;
    for (const auto& f : partner->factors) {
      rhs = rhs && ring_is_clean_kind(*f.ring, CleanKind::strongly_jsharp_clean);
    }
    return std::make_pair(lhs, rhs);
  };
  checks.push_back(Check{
      "CHK-product",
      "strong J#-cleanness of a product matches its factors",
      CheckSort::ring,
      [product_eval](const Subject& s) {
        bool any = false;
        for (int which : {0, 1, 2}) {
          std::string label;
          auto r = product_eval(s, which, &label);
          if (!r) continue;
          any = true;
          if (r->first != r->second) {
            return Outcome::fail(
                make_witness({{"which", which}, {"product", r->first}, {"factors", r->second}}),
                "mismatch on " + label);
          }
        }
        if (!any) return Outcome::skip("partner products exceed the order cap");
        return Outcome::pass();
      },
      [product_eval](const Subject& s, const Witness& w) {
        auto r = product_eval(s, int(*w.get("which")), nullptr);
        return r.has_value() && r->first != r->second;
      }});

  // CHK-quotient: quotients by radical-contained ideals inherit the property.
  checks.push_back(Check{
      "CHK-quotient",
      "quotients by ideals inside J keep strong J#-cleanness",
      CheckSort::ring,
      [](const Subject& s) {
        if (!s.ring_kind(CleanKind::strongly_jsharp_clean)) {
          return Outcome::skip("not strongly J#-clean");
        }
        if (s.ring().order() > 256) {
          return Outcome::skip("ideal enumeration bounded to order 256");
        }
        for (const auto& ideal : radical_subset_ideals(s)) {
          BuiltRing q = quotient_by(s, ideal, s.expr() + "/I");
          auto qsets = compute_structural_sets(*q.ring);
          for (std::size_t a = 0; a < q.ring->order(); ++a) {
            if (!element_is_clean_kind(*q.ring, *qsets, static_cast<elem>(a),
                                       CleanKind::strongly_jsharp_clean)) {
              Witness w;
              w.slots.emplace_back("gen_count", std::int64_t(ideal.gens.size()));
              for (std::size_t i = 0; i < ideal.gens.size(); ++i) {
                w.slots.emplace_back("g" + std::to_string(i), ideal.gens[i]);
              }
              w.slots.emplace_back("coset", std::int64_t(a));
              return Outcome::fail(std::move(w));
            }
          }
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness& w) {
        std::vector<elem> gens;
        auto count = w.get("gen_count");
        if (!count) return false;
        for (std::int64_t i = 0; i < *count; ++i) {
          auto g = w.get("g" + std::to_string(i));
          if (!g) return false;
          gens.push_back(static_cast<elem>(*g));
        }
        GeneratedIdeal ideal{gens, ideal_generated_by(s.built().ring, gens).members};
        BuiltRing q = quotient_by(s, ideal, s.expr() + "/I");
        auto qsets = compute_structural_sets(*q.ring);
        return !element_is_clean_kind(*q.ring, *qsets, static_cast<elem>(*w.get("coset")),
                                      CleanKind::strongly_jsharp_clean);
      }});

  // CHK-unit-decomp: a unit is strongly J#-clean iff 1-u lies in J#,
  // and every strongly J#-clean decomposition of a unit uses e = 1.
  checks.push_back(Check{
      "CHK-unit-decomp",
      "unit decompositions use e = 1 and match the 1-u criterion",
      CheckSort::ring,
      [](const Subject& s) {
        const FiniteRing& R = s.ring();
        const auto& S = s.sets();
        const auto& flags = s.kind_flags(CleanKind::strongly_jsharp_clean);
        for (elem u : S.units) {
          bool criterion = S.j_sharp.contains(R.sub(R.one(), u));
          if (bool(flags[u]) != criterion) {
            return Outcome::fail(make_witness({{"u", u}}, "iff-mismatch"));
          }
          for (const auto& d : decompositions(R, u, CleanKind::strongly_jsharp_clean)) {
            if (d.idempotent != R.one()) {
              return Outcome::fail(make_witness({{"u", u}, {"e", d.idempotent}},
                                                "non-identity-idempotent"));
            }
          }
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness& w) {
        const FiniteRing& R = s.ring();
        const auto& S = s.sets();
        elem u = static_cast<elem>(*w.get("u"));
        if (!S.units.contains(u)) return false;
        if (w.tag == "iff-mismatch") {
          bool is_clean = element_is_clean_kind(R, S, u, CleanKind::strongly_jsharp_clean);
          return is_clean != S.j_sharp.contains(R.sub(R.one(), u));
        }
        auto e = w.get("e");
        if (!e) return false;
        for (const auto& d : decompositions(R, u, CleanKind::strongly_jsharp_clean)) {
          if (d.idempotent == static_cast<elem>(*e) && d.idempotent != R.one()) return true;
        }
        return false;
      }});

  // CHK-U-eq-1-plus-Jsharp.
  checks.push_back(Check{
      "CHK-U-eq-1-plus-Jsharp",
      "strongly J#-clean rings satisfy U = 1 + J#",
      CheckSort::ring,
      [](const Subject& s) {
        if (!s.ring_kind(CleanKind::strongly_jsharp_clean)) {
          return Outcome::skip("not strongly J#-clean");
        }
        const auto& S = s.sets();
        auto plus = one_plus_mask(s.ring(), S.j_sharp);
        for (std::size_t v = 0; v < s.ring().order(); ++v) {
          if (bool(plus[v]) != S.units.contains(static_cast<elem>(v))) {
            return Outcome::fail(make_witness({{"element", std::int64_t(v)}}));
          }
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness& w) {
        const auto& S = s.sets();
        elem v = static_cast<elem>(*w.get("element"));
        auto plus = one_plus_mask(s.ring(), S.j_sharp);
        return bool(plus[v]) != S.units.contains(v);
      }});

  // CHK-two-in-J.
  checks.push_back(Check{
      "CHK-two-in-J",
      "strongly J#-clean rings put 2 inside J",
      CheckSort::ring,
      [](const Subject& s) {
        const FiniteRing& R = s.ring();
        bool two_in = s.sets().jacobson.contains(two_of(R));
        if (!s.ring_kind(CleanKind::strongly_jsharp_clean)) {
          std::string note = two_in
                                 ? "not strongly J#-clean"
                                 : "not strongly J#-clean; 2 outside J(R) is consistent "
                                   "with the contrapositive";
          return Outcome::skip("not strongly J#-clean", note);
        }
        if (!two_in) {
          return Outcome::fail(make_witness({{"two", two_of(R)}}));
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness&) {
        return s.ring_kind(CleanKind::strongly_jsharp_clean) &&
               !s.sets().jacobson.contains(two_of(s.ring()));
      }});

  // CHK-corner-Jsharp: J#(eRe) = eRe n J#(R) for every idempotent,
  // J#(eRe) is inside e J#(R) e, and the commuting squeeze lands back in
  // J#(eRe).  The unconditional reverse inclusion e J#(R) e <= J#(eRe)
  // is omitted: with e = diag(0,1) in M2(Z2) and the square-zero
  // all-ones matrix z, eze is the corner's identity, so it escapes
  // J#(eRe); J# is not an ideal and only commuting products squeeze in.
  auto corner_jsharp_eval = [](const Subject& s, elem e) -> std::optional<Witness> {
    const FiniteRing& R = s.ring();
    const auto& S = s.sets();
    if (e == R.zero() || e == R.one()) return std::nullopt;  // trivially equal
    CornerRing corner = corner_ring(s.built(), e);
    auto csets = compute_structural_sets(*corner.built.ring);
    const std::size_t q = corner.built.ring->order();
    std::vector<std::uint8_t> own(R.order(), 0);
    for (elem z : csets->j_sharp) own[corner.embed[z]] = 1;
    std::vector<std::uint8_t> meet(R.order(), 0);
    for (std::size_t i = 0; i < q; ++i) {
      elem x = corner.embed[i];
      if (S.j_sharp.contains(x)) meet[x] = 1;
    }
    std::vector<std::uint8_t> squeeze(R.order(), 0);
    for (elem z : S.j_sharp) squeeze[R.mul(R.mul(e, z), e)] = 1;
    for (std::size_t x = 0; x < R.order(); ++x) {
      if (own[x] != meet[x]) {
        return make_witness({{"e", e}, {"x", std::int64_t(x)}}, "own-vs-intersection");
      }
      if (own[x] && !squeeze[x]) {
        return make_witness({{"e", e}, {"x", std::int64_t(x)}}, "own-not-squeezed");
      }
    }
    for (elem z : S.j_sharp) {
      if (R.mul(e, z) != R.mul(z, e)) continue;
      if (!own[R.mul(R.mul(e, z), e)]) {
        return make_witness({{"e", e}, {"z", z}}, "commuting-squeeze");
      }
    }
    return std::nullopt;
  };
  checks.push_back(Check{
      "CHK-corner-Jsharp",
      "corner rings compute J# compatibly with the ambient ring",
      CheckSort::ring,
      [corner_jsharp_eval](const Subject& s) {
        for (elem e : s.sets().idempotents) {
          if (auto w = corner_jsharp_eval(s, e)) return Outcome::fail(std::move(*w));
        }
        return Outcome::pass();
      },
      [corner_jsharp_eval](const Subject& s, const Witness& w) {
        auto got = corner_jsharp_eval(s, static_cast<elem>(*w.get("e")));
        return got.has_value();
      }});

  // CHK-annihilator: for every strongly J#-clean decomposition a = e + j,
  // l(a) is inside R(1-e) and r(a) inside (1-e)R.
  auto annihilator_eval = [](const Subject& s, std::optional<Witness>* bad) {
    const FiniteRing& R = s.ring();
    const std::size_t n = R.order();
    for (std::size_t a = 0; a < n; ++a) {
      auto decomps = decompositions(R, static_cast<elem>(a),
                                    CleanKind::strongly_jsharp_clean);
      if (decomps.empty()) continue;
      ElemSet left = left_annihilator(R, static_cast<elem>(a));
      ElemSet right = right_annihilator(R, static_cast<elem>(a));
      for (const auto& d : decomps) {
        elem comp = R.sub(R.one(), d.idempotent);
        std::vector<std::uint8_t> left_ideal(n, 0), right_ideal(n, 0);
        for (std::size_t x = 0; x < n; ++x) {
          left_ideal[R.mul(static_cast<elem>(x), comp)] = 1;
          right_ideal[R.mul(comp, static_cast<elem>(x))] = 1;
        }
        for (elem x : left) {
          if (!left_ideal[x]) {
            *bad = make_witness({{"a", std::int64_t(a)}, {"e", d.idempotent}, {"x", x}},
                                "left");
            return false;
          }
        }
        for (elem x : right) {
          if (!right_ideal[x]) {
            *bad = make_witness({{"a", std::int64_t(a)}, {"e", d.idempotent}, {"x", x}},
                                "right");
            return false;
          }
        }
      }
    }
    return true;
  };
  checks.push_back(Check{
      "CHK-annihilator",
      "annihilators land in the complementary corner",
      CheckSort::ring,
      [annihilator_eval](const Subject& s) {
        std::optional<Witness> bad;
        if (!annihilator_eval(s, &bad)) return Outcome::fail(std::move(*bad));
        return Outcome::pass();
      },
      [](const Subject& s, const Witness& w) {
        const FiniteRing& R = s.ring();
        elem a = static_cast<elem>(*w.get("a"));
        elem e = static_cast<elem>(*w.get("e"));
        elem x = static_cast<elem>(*w.get("x"));
        elem comp = R.sub(R.one(), e);
        bool is_decomp = false;
        for (const auto& d : decompositions(R, a, CleanKind::strongly_jsharp_clean)) {
          if (d.idempotent == e) is_decomp = true;
        }
        if (!is_decomp) return false;
        if (w.tag == "left") {
          if (R.mul(x, a) != R.zero()) return false;
          for (std::size_t r = 0; r < R.order(); ++r) {
            if (R.mul(static_cast<elem>(r), comp) == x) return false;
          }
          return true;
        }
        if (R.mul(a, x) != R.zero()) return false;
        for (std::size_t r = 0; r < R.order(); ++r) {
          if (R.mul(comp, static_cast<elem>(r)) == x) return false;
        }
        return true;
      }});

  // CHK-corner-element: membership in the corner matches the ambient ring.
  auto corner_element_eval = [](const Subject& s, elem e) -> std::optional<Witness> {
    const FiniteRing& R = s.ring();
    if (e == R.zero()) return std::nullopt;
    const auto& rflags = s.kind_flags(CleanKind::strongly_jsharp_clean);
    CornerRing corner = corner_ring(s.built(), e);
    auto csets = compute_structural_sets(*corner.built.ring);
    for (std::size_t i = 0; i < corner.built.ring->order(); ++i) {
      bool in_corner = element_is_clean_kind(*corner.built.ring, *csets,
                                             static_cast<elem>(i),
                                             CleanKind::strongly_jsharp_clean);
      if (in_corner != bool(rflags[corner.embed[i]])) {
        return make_witness({{"e", e}, {"x", corner.embed[i]}});
      }
    }
    return std::nullopt;
  };
  checks.push_back(Check{
      "CHK-corner-element",
      "corner elements are strongly J#-clean exactly when they are in R",
      CheckSort::ring,
      [corner_element_eval](const Subject& s) {
        for (elem e : s.sets().idempotents) {
          if (auto w = corner_element_eval(s, e)) return Outcome::fail(std::move(*w));
        }
        return Outcome::pass();
      },
      [corner_element_eval](const Subject& s, const Witness& w) {
        return corner_element_eval(s, static_cast<elem>(*w.get("e"))).has_value();
      }});

  // CHK-matrix-negative: M2 over the subject is never strongly J#-clean,
  // and the two displayed unit matrices sum to the identity.
  auto matrix_negative_build = [](const Subject& s) -> std::optional<BuiltRing> {
    try {
      return matrix_ring(s.built(), 2);
    } catch (const SizeExceeded&) {
      return std::nullopt;
    }
  };
  checks.push_back(Check{
      "CHK-matrix-negative",
      "2x2 matrices over the ring are not strongly J#-clean",
      CheckSort::ring,
      [matrix_negative_build](const Subject& s) {
        if (s.ring().is_trivial()) return Outcome::skip("trivial base ring");
        auto m2 = matrix_negative_build(s);
        if (!m2) return Outcome::skip("M2 exceeds the order cap");
        const FiniteRing& M = *m2->ring;
        const FiniteRing& B = s.ring();
        if (ring_is_clean_kind(M, CleanKind::strongly_jsharp_clean)) {
          return Outcome::fail(make_witness({{"order", std::int64_t(M.order())}},
                                            "unexpectedly-clean"));
        }
        const auto* codec = dynamic_cast<const MatrixCodec*>(m2->codec.get());
        elem one = B.one(), zero = B.zero(), minus = B.neg(B.one());
        elem A = codec->combine({one, minus, minus, zero});
        elem Bm = codec->combine({zero, one, one, one});
        auto msets = compute_structural_sets(M);
        if (!msets->units.contains(A) || !msets->units.contains(Bm)) {
          return Outcome::fail(make_witness({{"A", A}, {"B", Bm}}, "not-units"));
        }
        if (M.add(A, Bm) != M.one()) {
          return Outcome::fail(make_witness({{"A", A}, {"B", Bm}}, "sum-not-identity"));
        }
        return Outcome::pass();
      },
      [matrix_negative_build](const Subject& s, const Witness& w) {
        auto m2 = matrix_negative_build(s);
        if (!m2) return false;
        const FiniteRing& M = *m2->ring;
        if (w.tag == "unexpectedly-clean") {
          return ring_is_clean_kind(M, CleanKind::strongly_jsharp_clean);
        }
        elem A = static_cast<elem>(*w.get("A")), Bm = static_cast<elem>(*w.get("B"));
        auto msets = compute_structural_sets(M);
        if (w.tag == "not-units") {
          return !msets->units.contains(A) || !msets->units.contains(Bm);
        }
        return M.add(A, Bm) != M.one();
      }});

  // CHK-dedekind.
  checks.push_back(Check{
      "CHK-dedekind",
      "one-sided inverses are two-sided",
      CheckSort::ring,
      [](const Subject& s) {
        const FiniteRing& R = s.ring();
        for (std::size_t a = 0; a < R.order(); ++a) {
          for (std::size_t b = 0; b < R.order(); ++b) {
            if (R.mul(static_cast<elem>(a), static_cast<elem>(b)) == R.one() &&
                R.mul(static_cast<elem>(b), static_cast<elem>(a)) != R.one()) {
              return Outcome::fail(
                  make_witness({{"a", std::int64_t(a)}, {"b", std::int64_t(b)}}));
            }
          }
        }
        return Outcome::pass("expected true for every finite ring");
      },
      [](const Subject& s, const Witness& w) {
        const FiniteRing& R = s.ring();
        elem a = static_cast<elem>(*w.get("a")), b = static_cast<elem>(*w.get("b"));
        return R.mul(a, b) == R.one() && R.mul(b, a) != R.one();
      }});

  // CHK-x-characterization.
  checks.push_back(Check{
      "CHK-x-characterization",
      "x^2 a = x witness agrees with the decomposition search",
      CheckSort::ring,
      [](const Subject& s) {
        const FiniteRing& R = s.ring();
        const auto& flags = s.kind_flags(CleanKind::strongly_jsharp_clean);
        for (std::size_t a = 0; a < R.order(); ++a) {
          bool via_x = strongly_jsharp_witness_x(R, static_cast<elem>(a)).has_value();
          if (via_x != bool(flags[a])) {
            return Outcome::fail(make_witness({{"a", std::int64_t(a)}}));
          }
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness& w) {
        const FiniteRing& R = s.ring();
        elem a = static_cast<elem>(*w.get("a"));
        bool via_x = strongly_jsharp_witness_x(R, a).has_value();
        return via_x != element_is_clean_kind(R, s.sets(), a,
                                              CleanKind::strongly_jsharp_clean);
      }});

  // CHK-reverse: ab strongly J#-clean implies ba is; same for 1-ab / 1-ba.
  checks.push_back(Check{
      "CHK-reverse",
      "strong J#-cleanness transfers from ab to ba",
      CheckSort::ring,
      [](const Subject& s) {
        const FiniteRing& R = s.ring();
        const auto& flags = s.kind_flags(CleanKind::strongly_jsharp_clean);
        for (std::size_t a = 0; a < R.order(); ++a) {
          for (std::size_t b = 0; b < R.order(); ++b) {
            elem ab = R.mul(static_cast<elem>(a), static_cast<elem>(b));
            elem ba = R.mul(static_cast<elem>(b), static_cast<elem>(a));
            if (flags[ab] && !flags[ba]) {
              return Outcome::fail(
                  make_witness({{"a", std::int64_t(a)}, {"b", std::int64_t(b)}}, "direct"));
            }
            if (flags[R.sub(R.one(), ab)] && !flags[R.sub(R.one(), ba)]) {
              return Outcome::fail(make_witness(
                  {{"a", std::int64_t(a)}, {"b", std::int64_t(b)}}, "one-minus"));
            }
          }
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness& w) {
        const FiniteRing& R = s.ring();
        const auto& S = s.sets();
        elem a = static_cast<elem>(*w.get("a")), b = static_cast<elem>(*w.get("b"));
        elem ab = R.mul(a, b), ba = R.mul(b, a);
        if (w.tag == "one-minus") {
          ab = R.sub(R.one(), ab);
          ba = R.sub(R.one(), ba);
        }
        return element_is_clean_kind(R, S, ab, CleanKind::strongly_jsharp_clean) &&
               !element_is_clean_kind(R, S, ba, CleanKind::strongly_jsharp_clean);
      }});

  // CHK-clean-equiv: with Ueq := (U = 1 + J#),
  //   clean & Ueq  <=>  J#-clean & Ueq,  and both imply J#-clean.
  // The reverse step from bare J#-cleanness back to Ueq is omitted: it
  // fails on 2x2 matrices over Z2, which are nil-clean (hence J#-clean)
  // while |U| = 6 and |1 + J#| = 4.
  auto clean_equiv_eval = [](const Subject& s) {
    bool ueq = units_eq_one_plus_jsharp(s);
    bool c1 = s.ring_kind(CleanKind::clean) && ueq;
    bool c2 = s.ring_kind(CleanKind::jsharp_clean) && ueq;
    bool c3 = s.ring_kind(CleanKind::jsharp_clean);
    return std::array<bool, 3>{c1, c2, c3};
  };
  checks.push_back(Check{
      "CHK-clean-equiv",
      "clean with U = 1+J# matches J#-clean with U = 1+J#",
      CheckSort::ring,
      [clean_equiv_eval](const Subject& s) {
        auto [c1, c2, c3] = clean_equiv_eval(s);
        if (c1 != c2 || (c2 && !c3)) {
          return Outcome::fail(make_witness({{"c1", c1}, {"c2", c2}, {"c3", c3}}));
        }
        return Outcome::pass();
      },
      [clean_equiv_eval](const Subject& s, const Witness&) {
        auto [c1, c2, c3] = clean_equiv_eval(s);
        return c1 != c2 || (c2 && !c3);
      }});

  // CHK-strongly-clean.
  checks.push_back(Check{
      "CHK-strongly-clean",
      "strongly J#-clean rings are strongly clean",
      CheckSort::ring,
      [](const Subject& s) {
        if (!s.ring_kind(CleanKind::strongly_jsharp_clean)) {
          return Outcome::skip("not strongly J#-clean");
        }
        const auto& flags = s.kind_flags(CleanKind::strongly_clean);
        for (std::size_t a = 0; a < s.ring().order(); ++a) {
          if (!flags[a]) return Outcome::fail(make_witness({{"a", std::int64_t(a)}}));
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness& w) {
        return !element_is_clean_kind(s.ring(), s.sets(),
                                      static_cast<elem>(*w.get("a")),
                                      CleanKind::strongly_clean);
      }});

  // CHK-iff-split: strongly J#-clean <=> strongly clean and U = 1+J#.
  checks.push_back(Check{
      "CHK-iff-split",
      "strongly J#-clean splits into strongly clean plus U = 1+J#",
      CheckSort::ring,
      [](const Subject& s) {
        bool lhs = s.ring_kind(CleanKind::strongly_jsharp_clean);
        bool rhs = s.ring_kind(CleanKind::strongly_clean) && units_eq_one_plus_jsharp(s);
        if (lhs != rhs) {
          return Outcome::fail(make_witness({{"lhs", lhs}, {"rhs", rhs}}));
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness&) {
        bool lhs = s.ring_kind(CleanKind::strongly_jsharp_clean);
        bool rhs = s.ring_kind(CleanKind::strongly_clean) && units_eq_one_plus_jsharp(s);
        return lhs != rhs;
      }});

  // CHK-UU-quotient: U = 1+J# forces R/J to be UU.
  checks.push_back(Check{
      "CHK-UU-quotient",
      "U = 1+J# makes the radical quotient a UU ring",
      CheckSort::ring,
      [](const Subject& s) {
        if (!units_eq_one_plus_jsharp(s)) return Outcome::skip("U differs from 1 + J#");
        const BuiltRing& q = s.quotient_by_radical();
        auto qsets = compute_structural_sets(*q.ring);
        auto plus = one_plus_mask(*q.ring, qsets->nilpotents);
        for (std::size_t v = 0; v < q.ring->order(); ++v) {
          if (bool(plus[v]) != qsets->units.contains(static_cast<elem>(v))) {
            return Outcome::fail(make_witness({{"coset", std::int64_t(v)}}));
          }
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness& w) {
        const BuiltRing& q = s.quotient_by_radical();
        auto qsets = compute_structural_sets(*q.ring);
        elem v = static_cast<elem>(*w.get("coset"));
        auto plus = one_plus_mask(*q.ring, qsets->nilpotents);
        return bool(plus[v]) != qsets->units.contains(v);
      }});

  // CHK-boolean-quotient.
  checks.push_back(Check{
      "CHK-boolean-quotient",
      "strongly J#-clean rings have Boolean radical quotients",
      CheckSort::ring,
      [](const Subject& s) {
        if (!s.ring_kind(CleanKind::strongly_jsharp_clean)) {
          return Outcome::skip("not strongly J#-clean");
        }
        const BuiltRing& q = s.quotient_by_radical();
        for (std::size_t v = 0; v < q.ring->order(); ++v) {
          if (q.ring->mul(static_cast<elem>(v), static_cast<elem>(v)) != v) {
            return Outcome::fail(make_witness({{"coset", std::int64_t(v)}}));
          }
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness& w) {
        const BuiltRing& q = s.quotient_by_radical();
        elem v = static_cast<elem>(*w.get("coset"));
        return q.ring->mul(v, v) != v;
      }});

  // CHK-J-eq: strongly J-clean <=> strongly J#-clean and J# = J.
  checks.push_back(Check{
      "CHK-J-eq",
      "strong J-cleanness is strong J#-cleanness with J# = J",
      CheckSort::ring,
      [](const Subject& s) {
        bool lhs = s.ring_kind(CleanKind::strongly_j_clean);
        bool rhs = s.ring_kind(CleanKind::strongly_jsharp_clean) &&
                   s.sets().j_sharp == s.sets().jacobson;
        if (lhs != rhs) return Outcome::fail(make_witness({{"lhs", lhs}, {"rhs", rhs}}));
        return Outcome::pass();
      },
      [](const Subject& s, const Witness&) {
        bool lhs = s.ring_kind(CleanKind::strongly_j_clean);
        bool rhs = s.ring_kind(CleanKind::strongly_jsharp_clean) &&
                   s.sets().j_sharp == s.sets().jacobson;
        return lhs != rhs;
      }});

  // CHK-nil-eq: strongly nil-clean <=> strongly J#-clean and J# = Nil.
  checks.push_back(Check{
      "CHK-nil-eq",
      "strong nil-cleanness is strong J#-cleanness with J# = Nil",
      CheckSort::ring,
      [](const Subject& s) {
        bool lhs = s.ring_kind(CleanKind::strongly_nil_clean);
        bool rhs = s.ring_kind(CleanKind::strongly_jsharp_clean) &&
                   s.sets().j_sharp == s.sets().nilpotents;
        if (lhs != rhs) return Outcome::fail(make_witness({{"lhs", lhs}, {"rhs", rhs}}));
        return Outcome::pass();
      },
      [](const Subject& s, const Witness&) {
        bool lhs = s.ring_kind(CleanKind::strongly_nil_clean);
        bool rhs = s.ring_kind(CleanKind::strongly_jsharp_clean) &&
                   s.sets().j_sharp == s.sets().nilpotents;
        return lhs != rhs;
      }});

  // CHK-unique: abelian J#-clean <=> uniquely J#-clean <=> uniquely clean.
  auto unique_eval = [](const Subject& s) {
    const auto& S = s.sets();
    bool b1 = is_abelian(s.ring(), S) && s.ring_kind(CleanKind::jsharp_clean);
    bool b2 = is_uniquely_jsharp_clean(s.ring(), S);
    bool b3 = is_uniquely_clean(s.ring(), S);
    return std::array<bool, 3>{b1, b2, b3};
  };
  checks.push_back(Check{
      "CHK-unique",
      "abelian J#-cleanness, unique J#-cleanness and unique cleanness agree",
      CheckSort::ring,
      [unique_eval](const Subject& s) {
        auto [b1, b2, b3] = unique_eval(s);
        if (b1 != b2 || b2 != b3) {
          return Outcome::fail(make_witness({{"abelian_jsharp", b1},
                                             {"uniquely_jsharp", b2},
                                             {"uniquely_clean", b3}}));
        }
        return Outcome::pass();
      },
      [unique_eval](const Subject& s, const Witness&) {
        auto [b1, b2, b3] = unique_eval(s);
        return b1 != b2 || b2 != b3;
      }});

  // CHK-local-family: division/local/semisimple consequences.
  auto local_family_eval = [](const Subject& s) -> std::optional<Witness> {
    const FiniteRing& R = s.ring();
    const auto& S = s.sets();
    bool sjs = s.ring_kind(CleanKind::strongly_jsharp_clean);
    bool division = !R.is_trivial() && S.units.size() == R.order() - 1;
    if (division && (sjs != (R.order() == 2))) {
      return make_witness({{"order", std::int64_t(R.order())}}, "division");
    }
    bool local = is_local(R, S);
    std::size_t quot_order = R.order() / S.jacobson.size();
    if ((local && sjs) != (quot_order == 2)) {
      return make_witness({{"quotient_order", std::int64_t(quot_order)}}, "local");
    }
    if (S.jacobson.size() == 1 && sjs) {
      for (std::size_t a = 0; a < R.order(); ++a) {
        if (R.mul(static_cast<elem>(a), static_cast<elem>(a)) != a) {
          return make_witness({{"a", std::int64_t(a)}}, "semisimple-boolean");
        }
      }
    }
    return std::nullopt;
  };
  checks.push_back(Check{
      "CHK-local-family",
      "division, local and radical-free consequences",
      CheckSort::ring,
      [local_family_eval](const Subject& s) {
        if (auto w = local_family_eval(s)) return Outcome::fail(std::move(*w));
        return Outcome::pass();
      },
      [local_family_eval](const Subject& s, const Witness& w) {
        auto got = local_family_eval(s);
        return got.has_value() && got->tag == w.tag;
      }});

  // CHK-local-idem: for strongly J#-clean rings, local <=> only trivial
  // idempotents <=> R = J# u U.
  checks.push_back(Check{
      "CHK-local-idem",
      "local matches trivial idempotents in strongly J#-clean rings",
      CheckSort::ring,
      [](const Subject& s) {
        if (s.ring().is_trivial()) return Outcome::skip("trivial ring");
        if (!s.ring_kind(CleanKind::strongly_jsharp_clean)) {
          return Outcome::skip("not strongly J#-clean");
        }
        const auto& S = s.sets();
        bool local = is_local(s.ring(), S);
        bool trivial_idem = S.idempotents.size() == 2;
        bool covered = S.j_sharp.size() + S.units.size() == s.ring().order();
        if (local != trivial_idem || local != covered) {
          return Outcome::fail(make_witness(
              {{"local", local}, {"trivial_idem", trivial_idem}, {"covered", covered}}));
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness&) {
        const auto& S = s.sets();
        bool local = is_local(s.ring(), S);
        bool trivial_idem = S.idempotents.size() == 2;
        bool covered = S.j_sharp.size() + S.units.size() == s.ring().order();
        return local != trivial_idem || local != covered;
      }});

  // CHK-grouplemma: augmentation ideal inside J(RG), Boolean quotient,
  // and the fiber description of J(RG).
  auto grouplemma_eval = [](const Subject& s) -> std::optional<Witness> {
    const FiniteRing& RG = s.ring();
    const auto& S = s.sets();
    const auto& base = *s.group_ring->base.ring;
    auto base_sets = compute_structural_sets(base);
    IdealSet delta = augmentation_ideal(s.built());
    for (elem d : delta.members) {
      if (!S.jacobson.contains(d)) return make_witness({{"x", d}}, "delta-outside-J");
    }
    const BuiltRing& q = s.quotient_by_radical();
    for (std::size_t v = 0; v < q.ring->order(); ++v) {
      if (q.ring->mul(static_cast<elem>(v), static_cast<elem>(v)) != v) {
        return make_witness({{"coset", std::int64_t(v)}}, "quotient-not-boolean");
      }
    }
    for (std::size_t x = 0; x < RG.order(); ++x) {
      bool fiber = base_sets->jacobson.contains(augmentation(s.built(), static_cast<elem>(x)));
      if (fiber != S.jacobson.contains(static_cast<elem>(x))) {
        return make_witness({{"x", std::int64_t(x)}}, "fiber-mismatch");
      }
    }
    return std::nullopt;
  };
  checks.push_back(Check{
      "CHK-grouplemma",
      "augmentation ideal and radical interact as expected over 2-groups",
      CheckSort::group_ring,
      [grouplemma_eval](const Subject& s) {
        const auto& facet = *s.group_ring;
        if (!facet.group->is_2_group()) return Outcome::skip("group is not a 2-group");
        if (!ring_is_clean_kind(*facet.base.ring, CleanKind::strongly_jsharp_clean)) {
          return Outcome::skip("base ring not strongly J#-clean");
        }
        if (auto w = grouplemma_eval(s)) return Outcome::fail(std::move(*w));
        return Outcome::pass();
      },
      [grouplemma_eval](const Subject& s, const Witness& w) {
        auto got = grouplemma_eval(s);
        return got.has_value() && got->tag == w.tag;
      }});

  // CHK-groupring-necessity: RG strongly J#-clean forces base + 2-group.
  checks.push_back(Check{
      "CHK-groupring-necessity",
      "strong J#-cleanness of RG forces it on R and makes G a 2-group",
      CheckSort::group_ring,
      [](const Subject& s) {
        if (!s.ring_kind(CleanKind::strongly_jsharp_clean)) {
          return Outcome::skip("group ring not strongly J#-clean");
        }
        const auto& facet = *s.group_ring;
        bool base_ok = ring_is_clean_kind(*facet.base.ring,
                                          CleanKind::strongly_jsharp_clean);
        bool group_ok = facet.group->is_2_group();
        if (!base_ok || !group_ok) {
          return Outcome::fail(
              make_witness({{"base_ok", base_ok}, {"group_ok", group_ok}}));
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness&) {
        const auto& facet = *s.group_ring;
        return s.ring_kind(CleanKind::strongly_jsharp_clean) &&
               (!ring_is_clean_kind(*facet.base.ring, CleanKind::strongly_jsharp_clean) ||
                !facet.group->is_2_group());
      }});

  // CHK-groupring-abelian: over abelian bases the converse holds too.
  checks.push_back(Check{
      "CHK-groupring-abelian",
      "over abelian bases RG is strongly J#-clean iff R is and G is a 2-group",
      CheckSort::group_ring,
      [](const Subject& s) {
        const auto& facet = *s.group_ring;
        auto base_sets = compute_structural_sets(*facet.base.ring);
        if (!is_abelian(*facet.base.ring, *base_sets)) {
          return Outcome::skip("base ring not abelian");
        }
        bool lhs = s.ring_kind(CleanKind::strongly_jsharp_clean);
        bool rhs = ring_is_clean_kind(*facet.base.ring, CleanKind::strongly_jsharp_clean) &&
                   facet.group->is_2_group();
        if (lhs != rhs) return Outcome::fail(make_witness({{"lhs", lhs}, {"rhs", rhs}}));
        return Outcome::pass();
      },
      [](const Subject& s, const Witness&) {
        const auto& facet = *s.group_ring;
        bool lhs = s.ring_kind(CleanKind::strongly_jsharp_clean);
        bool rhs = ring_is_clean_kind(*facet.base.ring, CleanKind::strongly_jsharp_clean) &&
                   facet.group->is_2_group();
        return lhs != rhs;
      }});

  // CHK-odd-group: nontrivial odd-order groups never give the property.
  checks.push_back(Check{
      "CHK-odd-group",
      "group rings over nontrivial odd-order groups fail the property",
      CheckSort::group_ring,
      [](const Subject& s) {
        const auto& facet = *s.group_ring;
        if (facet.group->order() <= 1) return Outcome::skip("trivial group");
        if (facet.group->order() % 2 == 0) {
          return Outcome::skip("group has even order (even-order subgroups exist)");
        }
        if (s.ring_kind(CleanKind::strongly_jsharp_clean)) {
          return Outcome::fail(make_witness(
              {{"group_order", std::int64_t(facet.group->order())}}));
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness&) {
        return s.ring_kind(CleanKind::strongly_jsharp_clean);
      }});

  // CHK-Ks-radical: block formula for J(K_s(R)); unit criterion for
  // local bases with s in J.
  auto ks_radical_eval = [](const Subject& s) -> std::optional<Witness> {
    const auto& facet = *s.ks;
    const FiniteRing& B = *facet.base.ring;
    const FiniteRing& K = s.ring();
    const auto& S = s.sets();
    auto bsets = compute_structural_sets(B);
    const auto* codec = quad_codec(s);
    std::vector<std::uint8_t> colon(B.order(), 0);  // (s : J) = {r : r s in J}
    for (std::size_t r = 0; r < B.order(); ++r) {
      colon[r] = bsets->jacobson.contains(B.mul(static_cast<elem>(r), facet.multiplier));
    }
    for (std::size_t x = 0; x < K.order(); ++x) {
      auto q = codec->quad(static_cast<elem>(x));
      bool block = bsets->jacobson.contains(q[0]) && bsets->jacobson.contains(q[3]) &&
                   colon[q[1]] && colon[q[2]];
      if (block != S.jacobson.contains(static_cast<elem>(x))) {
        return make_witness({{"x", std::int64_t(x)}}, "block-formula");
      }
    }
    bool local = is_local(B, *bsets);
    if (local && bsets->jacobson.contains(facet.multiplier)) {
      for (std::size_t x = 0; x < K.order(); ++x) {
        auto q = codec->quad(static_cast<elem>(x));
        bool corner_j = bsets->jacobson.contains(q[0]) && bsets->jacobson.contains(q[3]);
        if (corner_j != S.jacobson.contains(static_cast<elem>(x))) {
          return make_witness({{"x", std::int64_t(x)}}, "local-block");
        }
        bool diag_units = bsets->units.contains(q[0]) && bsets->units.contains(q[3]);
        if (diag_units != S.units.contains(static_cast<elem>(x))) {
          return make_witness({{"x", std::int64_t(x)}}, "unit-criterion");
        }
      }
    }
    return std::nullopt;
  };
  checks.push_back(Check{
      "CHK-Ks-radical",
      "the radical of K_s(R) matches the block formula",
      CheckSort::gen_matrix,
      [ks_radical_eval](const Subject& s) {
        if (auto w = ks_radical_eval(s)) return Outcome::fail(std::move(*w));
        const auto& facet = *s.ks;
        auto bsets = compute_structural_sets(*facet.base.ring);
        bool extras = is_local(*facet.base.ring, *bsets) &&
                      bsets->jacobson.contains(facet.multiplier);
        return Outcome::pass(extras ? "" : "unit criterion needs a local base with s in J");
      },
      [ks_radical_eval](const Subject& s, const Witness& w) {
        auto got = ks_radical_eval(s);
        return got.has_value() && got->tag == w.tag;
      }});

  // CHK-Ks-conjugation: conjugation preserves strong J#-cleanness.
  checks.push_back(Check{
      "CHK-Ks-conjugation",
      "strong J#-cleanness is a conjugation invariant",
      CheckSort::ring,
      [](const Subject& s) {
        const FiniteRing& R = s.ring();
        const auto& S = s.sets();
        const auto& flags = s.kind_flags(CleanKind::strongly_jsharp_clean);
        for (std::size_t a = 0; a < R.order(); ++a) {
          for (elem u : S.units) {
            if (flags[a] != flags[conjugate(R, S, u, static_cast<elem>(a))]) {
              return Outcome::fail(make_witness({{"a", std::int64_t(a)}, {"u", u}}));
            }
          }
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness& w) {
        const FiniteRing& R = s.ring();
        const auto& S = s.sets();
        elem a = static_cast<elem>(*w.get("a")), u = static_cast<elem>(*w.get("u"));
        return element_is_clean_kind(R, S, a, CleanKind::strongly_jsharp_clean) !=
               element_is_clean_kind(R, S, conjugate(R, S, u, a),
                                     CleanKind::strongly_jsharp_clean);
      }});

  // CHK-Ks-idempotents: nontrivial idempotents are conjugate to the
  // diagonal ones, following the s in U / s in J case split.
  auto ks_idem_eval = [](const Subject& s) -> std::optional<Witness> {
    const auto& facet = *s.ks;
    const FiniteRing& B = *facet.base.ring;
    const FiniteRing& K = s.ring();
    const auto& S = s.sets();
    auto bsets = compute_structural_sets(B);
    const auto* codec = quad_codec(s);
    elem diag10 = codec->combine({B.one(), B.zero(), B.zero(), B.zero()});
    elem diag01 = codec->combine({B.zero(), B.zero(), B.zero(), B.one()});
    bool s_unit = bsets->units.contains(facet.multiplier);
    for (elem E : S.idempotents) {
      if (E == K.zero() || E == K.one()) continue;
      bool found = false;
      for (elem p : S.units) {
        elem conj = conjugate(K, S, p, E);
        if (conj == diag10 || (!s_unit && conj == diag01)) {
          found = true;
          break;
        }
      }
      if (!found) return make_witness({{"E", E}});
    }
    return std::nullopt;
  };
  checks.push_back(Check{
      "CHK-Ks-idempotents",
      "nontrivial idempotents of K_s(R) are similar to diagonal ones",
      CheckSort::gen_matrix,
      [ks_idem_eval](const Subject& s) {
        const auto& facet = *s.ks;
        auto bsets = compute_structural_sets(*facet.base.ring);
        if (!is_local(*facet.base.ring, *bsets)) {
          return Outcome::skip("base ring not local");
        }
        if (auto w = ks_idem_eval(s)) return Outcome::fail(std::move(*w));
        return Outcome::pass();
      },
      [ks_idem_eval](const Subject& s, const Witness&) {
        return ks_idem_eval(s).has_value();
      }});

  // CHK-Ks-diagonal: diagonal members of J#(K_s) have entries in J(R).
  auto ks_diag_eval = [](const Subject& s) -> std::optional<Witness> {
    const auto& facet = *s.ks;
    const FiniteRing& B = *facet.base.ring;
    const auto& S = s.sets();
    auto bsets = compute_structural_sets(B);
    const auto* codec = quad_codec(s);
    for (std::size_t a = 0; a < B.order(); ++a) {
      for (std::size_t b = 0; b < B.order(); ++b) {
        elem X = codec->combine({static_cast<elem>(a), B.zero(), B.zero(),
                                 static_cast<elem>(b)});
        if (!S.j_sharp.contains(X)) continue;
        if (!bsets->jacobson.contains(static_cast<elem>(a)) ||
            !bsets->jacobson.contains(static_cast<elem>(b))) {
          return make_witness({{"a", std::int64_t(a)}, {"b", std::int64_t(b)}});
        }
      }
    }
    return std::nullopt;
  };
  checks.push_back(Check{
      "CHK-Ks-diagonal",
      "diagonal J# members of K_s(R) sit inside J(R) entrywise",
      CheckSort::gen_matrix,
      [ks_diag_eval](const Subject& s) {
        const auto& facet = *s.ks;
        auto bsets = compute_structural_sets(*facet.base.ring);
        if (!is_local(*facet.base.ring, *bsets)) {
          return Outcome::skip("base ring not local");
        }
        if (auto w = ks_diag_eval(s)) return Outcome::fail(std::move(*w));
        return Outcome::pass();
      },
      [ks_diag_eval](const Subject& s, const Witness&) {
        return ks_diag_eval(s).has_value();
      }});

  // CHK-locstr: three-case classification of strongly J#-clean elements
  // of K_s(R) over a local base.
  auto locstr_eval = [](const Subject& s) -> std::optional<Witness> {
    const auto& facet = *s.ks;
    const FiniteRing& B = *facet.base.ring;
    const FiniteRing& K = s.ring();
    const auto& S = s.sets();
    auto bsets = compute_structural_sets(B);
    const auto* codec = quad_codec(s);
    const auto& flags = s.kind_flags(CleanKind::strongly_jsharp_clean);
    auto one_plus_j = one_plus_mask(B, bsets->jacobson);
    auto split = [&](elem a, elem b) {
      bool aj = bsets->jacobson.contains(a), bj = bsets->jacobson.contains(b);
      return (aj && one_plus_j[b]) || (bj && one_plus_j[a]);
    };
    for (std::size_t x = 0; x < K.order(); ++x) {
      elem X = static_cast<elem>(x);
      bool rhs = S.j_sharp.contains(X) || S.j_sharp.contains(K.sub(X, K.one()));
      if (!rhs) {
        for (elem p : S.units) {
          auto q = codec->quad(conjugate(K, S, p, X));
          if (q[1] == B.zero() && q[2] == B.zero() && split(q[0], q[3])) {
            rhs = true;
            break;
          }
        }
      }
      if (rhs != bool(flags[x])) return make_witness({{"x", std::int64_t(x)}});
    }
    return std::nullopt;
  };
  checks.push_back(Check{
      "CHK-locstr",
      "the three-case classification matches the decomposition search",
      CheckSort::gen_matrix,
      [locstr_eval](const Subject& s) {
        const auto& facet = *s.ks;
        auto bsets = compute_structural_sets(*facet.base.ring);
        if (!is_local(*facet.base.ring, *bsets)) {
          return Outcome::skip("base ring not local");
        }
        if (auto w = locstr_eval(s)) return Outcome::fail(std::move(*w));
        return Outcome::pass();
      },
      [locstr_eval](const Subject& s, const Witness&) {
        return locstr_eval(s).has_value();
      }});

  // CHK-deltanu: strongly delta-nil-clean rings are DNU and strongly clean.
  checks.push_back(Check{
      "CHK-deltanu",
      "strongly delta-nil-clean rings are DNU and strongly clean",
      CheckSort::ring,
      [](const Subject& s) {
        if (!s.ring_kind(CleanKind::strongly_deltan_clean)) {
          return Outcome::skip("not strongly delta-nil-clean");
        }
        const auto& S = s.sets();
        if (!units_equal_one_plus(s.ring(), S.units, S.delta_nilpotents)) {
          auto plus = one_plus_mask(s.ring(), S.delta_nilpotents);
          for (std::size_t v = 0; v < s.ring().order(); ++v) {
            if (bool(plus[v]) != S.units.contains(static_cast<elem>(v))) {
              return Outcome::fail(make_witness({{"element", std::int64_t(v)}}, "dnu"));
            }
          }
        }
        const auto& flags = s.kind_flags(CleanKind::strongly_clean);
        for (std::size_t a = 0; a < s.ring().order(); ++a) {
          if (!flags[a]) {
            return Outcome::fail(make_witness({{"element", std::int64_t(a)}},
                                              "strongly-clean"));
          }
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness& w) {
        const auto& S = s.sets();
        elem v = static_cast<elem>(*w.get("element"));
        if (w.tag == "dnu") {
          auto plus = one_plus_mask(s.ring(), S.delta_nilpotents);
          return bool(plus[v]) != S.units.contains(v);
        }
        return !element_is_clean_kind(s.ring(), S, v, CleanKind::strongly_clean);
      }});

  // CHK-main-equiv: strongly J-clean = strongly QN-clean = strongly DN-clean.
  auto main_equiv_eval = [](const Subject& s) {
    return std::array<bool, 3>{s.ring_kind(CleanKind::strongly_j_clean),
                               s.ring_kind(CleanKind::strongly_qn_clean),
                               s.ring_kind(CleanKind::strongly_deltan_clean)};
  };
  checks.push_back(Check{
      "CHK-main-equiv",
      "strong J-, QN- and delta-nil-cleanness coincide",
      CheckSort::ring,
      [main_equiv_eval](const Subject& s) {
        auto [b1, b2, b3] = main_equiv_eval(s);
        if (b1 != b2 || b2 != b3) {
          return Outcome::fail(make_witness({{"j", b1}, {"qn", b2}, {"dn", b3}}));
        }
        return Outcome::pass();
      },
      [main_equiv_eval](const Subject& s, const Witness&) {
        auto [b1, b2, b3] = main_equiv_eval(s);
        return b1 != b2 || b2 != b3;
      }});

  // CHK-cor8: uniquely clean <=> abelian delta-nil-clean.
  checks.push_back(Check{
      "CHK-cor8",
      "unique cleanness matches abelian delta-nil-cleanness",
      CheckSort::ring,
      [](const Subject& s) {
        const auto& S = s.sets();
        bool lhs = is_uniquely_clean(s.ring(), S);
        bool rhs = is_abelian(s.ring(), S) && s.ring_kind(CleanKind::deltan_clean);
        if (lhs != rhs) return Outcome::fail(make_witness({{"lhs", lhs}, {"rhs", rhs}}));
        return Outcome::pass();
      },
      [](const Subject& s, const Witness&) {
        const auto& S = s.sets();
        bool lhs = is_uniquely_clean(s.ring(), S);
        bool rhs = is_abelian(s.ring(), S) && s.ring_kind(CleanKind::deltan_clean);
        return lhs != rhs;
      }});

  // CHK-six-equiv: the six-way equivalence around unique cleanness.
  auto six_eval = [](const Subject& s) {
    const auto& S = s.sets();
    bool abelian = is_abelian(s.ring(), S);
    return std::array<bool, 5>{abelian && s.ring_kind(CleanKind::j_clean),
                               abelian && s.ring_kind(CleanKind::jsharp_clean),
                               abelian && s.ring_kind(CleanKind::qn_clean),
                               abelian && s.ring_kind(CleanKind::deltan_clean),
                               is_uniquely_clean(s.ring(), S)};
  };
  checks.push_back(Check{
      "CHK-six-equiv",
      "abelian clean-family variants and unique cleanness coincide",
      CheckSort::ring,
      [six_eval](const Subject& s) {
        auto v = six_eval(s);
        for (std::size_t i = 1; i < v.size(); ++i) {
          if (v[i] != v[0]) {
            return Outcome::fail(make_witness({{"first", v[0]},
                                               {"other", v[i]},
                                               {"index", std::int64_t(i + 1)}},
                                              "items-1-to-5"));
          }
        }
        std::string note;
        if (s.ring().order() <= 64) {
          bool v6 = true;
          GeneratedIdeal bad_ideal;
          for (const auto& ideal : small_ideal_lattice(s)) {
            BuiltRing q = quotient_by(s, ideal, s.expr() + "/I");
            if (!ring_is_uniquely_clean(*q.ring)) {
              v6 = false;
              bad_ideal = ideal;
              break;
            }
          }
          if (v6 != v[4]) {
            Witness w;
            w.tag = "item-6";
            w.slots.emplace_back("gen_count", std::int64_t(bad_ideal.gens.size()));
            for (std::size_t i = 0; i < bad_ideal.gens.size(); ++i) {
              w.slots.emplace_back("g" + std::to_string(i), bad_ideal.gens[i]);
            }
            return Outcome::fail(std::move(w));
          }
        } else {
          note = "homomorphic-image item bounded to order 64";
        }
        return Outcome::pass(note);
      },
      [six_eval](const Subject& s, const Witness& w) {
        auto v = six_eval(s);
        if (w.tag == "items-1-to-5") {
          for (std::size_t i = 1; i < v.size(); ++i) {
            if (v[i] != v[0]) return true;
          }
          return false;
        }
        std::vector<elem> gens;
        auto count = w.get("gen_count");
        if (!count) return false;
        for (std::int64_t i = 0; i < *count; ++i) {
          gens.push_back(static_cast<elem>(*w.get("g" + std::to_string(i))));
        }
        GeneratedIdeal ideal{gens, ideal_generated_by(s.built().ring, gens).members};
        BuiltRing q = quotient_by(s, ideal, s.expr() + "/I");
        return ring_is_uniquely_clean(*q.ring) != v[4];
      }});

  // CHK-theorem-j: strongly J-clean coincides with strongly J#-clean.
  checks.push_back(Check{
      "CHK-theorem-j",
      "strong J-cleanness and strong J#-cleanness coincide",
      CheckSort::ring,
      [](const Subject& s) {
        bool j = s.ring_kind(CleanKind::strongly_j_clean);
        bool sharp = s.ring_kind(CleanKind::strongly_jsharp_clean);
        if (j != sharp) {
          const auto& jf = s.kind_flags(CleanKind::strongly_j_clean);
          const auto& sf = s.kind_flags(CleanKind::strongly_jsharp_clean);
          for (std::size_t a = 0; a < s.ring().order(); ++a) {
            if (jf[a] != sf[a]) {
              return Outcome::fail(make_witness({{"a", std::int64_t(a)},
                                                 {"j_clean", bool(jf[a])},
                                                 {"jsharp_clean", bool(sf[a])}}));
            }
          }
          return Outcome::fail(make_witness({{"j", j}, {"jsharp", sharp}}));
        }
        return Outcome::pass();
      },
      [](const Subject& s, const Witness&) {
        return s.ring_kind(CleanKind::strongly_j_clean) !=
               s.ring_kind(CleanKind::strongly_jsharp_clean);
      }});

  return checks;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

std::optional<std::int64_t> Witness::get(const std::string& name) const {
  for (const auto& [k, v] : slots) {
    if (k == name) return v;
  }
  return std::nullopt;
}

Subject::Subject(std::string expr, BuiltRing built)
    : expr_(std::move(expr)), built_(std::move(built)) {}

const StructuralSets& Subject::sets() const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!sets_) sets_ = compute_structural_sets(*built_.ring);
  return *sets_;
}

const std::vector<std::uint8_t>& Subject::kind_flags(CleanKind kind) const {
  sets();
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = flags_.find(kind);
  if (it == flags_.end()) {
    it = flags_.emplace(kind, elementwise_clean_kind(*built_.ring, *sets_, kind)).first;
  }
  return it->second;
}

bool Subject::ring_kind(CleanKind kind) const { return all_of_flags(kind_flags(kind)); }

const BuiltRing& Subject::quotient_by_radical() const {
  sets();
  std::lock_guard<std::mutex> lock(mutex_);
  if (!radical_quotient_) {
    IdealSet ideal{built_.ring, sets_->jacobson};
    radical_quotient_ = quotient_ring(built_, ideal, built_.ring->label() + "/J").built;
  }
  return *radical_quotient_;
}

std::vector<CheckInfo> list_checks() {
  std::vector<CheckInfo> out;
  for (const auto& c : registry()) out.push_back({c.id, c.summary, c.sort});
  return out;
}

namespace {

SubjectPtr make_subject(const std::string& expr) {
  ConstructionAst ast = parse_ring_expr(expr);
  auto subject = std::make_shared<Subject>(canonical_text(ast), eval_ast(ast));
  if (ast.kind == ConstructionAst::Kind::group_ring) {
    Subject::GroupRingFacet facet;
    facet.base = eval_ast(ast.children[0]);
    facet.group = ast.group_name[0] == '@' ? group_from_file(ast.group_name.substr(1))
                                           : builtin_group(ast.group_name);
    subject->group_ring = std::move(facet);
  } else if (ast.kind == ConstructionAst::Kind::gen_matrix) {
    Subject::KsFacet facet;
    facet.base = eval_ast(ast.children[0]);
    facet.multiplier = static_cast<elem>(ast.number);
    subject->ks = std::move(facet);
  }
  return subject;
}

}  // namespace

std::vector<SubjectPtr> make_subjects(const std::vector<std::string>& exprs) {
  if (exprs.empty()) throw EmptyCatalog("catalog has no expressions");
  std::vector<SubjectPtr> subjects;
  bool have_gr = false, have_ks = false;
  for (const auto& expr : exprs) {
    auto s = make_subject(expr);
    have_gr = have_gr || s->group_ring.has_value();
    have_ks = have_ks || s->ks.has_value();
    subjects.push_back(std::move(s));
  }
  // Derive small group-ring / K_s subjects when the catalog has none,
  // so those check families still exercise something.
  const std::size_t base_count = subjects.size();
  if (!have_gr) {
    for (std::size_t i = 0; i < base_count; ++i) {
      SubjectPtr s = subjects[i];  // push_back below may reallocate
      std::size_t n = s->ring().order();
      if (n < 2 || n > 16 || n * n > order_cap()) continue;
      subjects.push_back(make_subject("GR(" + s->expr() + ",C2)"));
    }
  }
  if (!have_ks) {
    for (std::size_t i = 0; i < base_count; ++i) {
      SubjectPtr s = subjects[i];
      std::size_t n = s->ring().order();
      if (n < 2 || n > 8 || n * n * n * n > order_cap()) continue;
      for (elem c : center(s->ring())) {
        subjects.push_back(
            make_subject("K(" + s->expr() + "," + std::to_string(c) + ")"));
      }
    }
  }
  return subjects;
}

namespace {

bool applicable(const Check& check, const Subject& subject, bool synthesized) {
  switch (check.sort) {
    case CheckSort::ring: return !synthesized;
    case CheckSort::group_ring: return subject.group_ring.has_value();
    case CheckSort::gen_matrix: return subject.ks.has_value();
  }
  return false;
}

const Check* find_check(const std::string& id) {
  for (const auto& c : registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

CheckResult run_one(const Check& check, const Subject& subject) {
  CheckResult result;
  result.check_id = check.id;
  result.subject = subject.expr();
  auto start = std::chrono::steady_clock::now();
  try {
    Outcome outcome = check.run(subject);
    result.status = outcome.status;
    result.reason = std::move(outcome.reason);
    result.witness = std::move(outcome.witness);
    result.note = std::move(outcome.note);
  } catch (const SizeExceeded& e) {
    result.status = CheckStatus::skipped;
    result.reason = e.what();
  } catch (const InternalInconsistency& e) {
    result.status = CheckStatus::fail;
    result.witness = make_witness({}, "internal-inconsistency");
    result.note = e.what();
  } catch (const AxiomViolation& e) {
    // Only reachable when a derived construction re-validates corrupted
    // tables; counts as a detected failure of the subject.
    result.status = CheckStatus::fail;
    result.witness = make_witness({}, "axiom-violation");
    result.note = e.what();
  }
  result.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return result;
}

}  // namespace

CheckResult run_check(const std::string& check_id, const Subject& subject) {
  const Check* check = find_check(check_id);
  if (!check) throw Error("unknown check id: " + check_id);
  if (!applicable(*check, subject, false)) {
    CheckResult result;
    result.check_id = check_id;
    result.subject = subject.expr();
    result.status = CheckStatus::skipped;
    result.reason = "subject lacks the facet this check needs";
    return result;
  }
  return run_one(*check, subject);
}

bool replay_witness(const CheckResult& result, const Subject& subject) {
  if (result.status != CheckStatus::fail) return true;
  const Check* check = find_check(result.check_id);
  if (!check || !result.witness) return false;
  if (result.witness->tag == "internal-inconsistency" ||
      result.witness->tag == "axiom-violation") {
    try {
      check->run(subject);
      return false;
    } catch (const InternalInconsistency&) {
      return true;
    } catch (const AxiomViolation&) {
      return true;
    }
  }
  try {
    return check->replay(subject, *result.witness);
  } catch (const InternalInconsistency&) {
    return true;  // the subject itself is inconsistent; the failure stands
  } catch (const AxiomViolation&) {
    return true;
  }
}

SuiteReport run_suite(const std::vector<std::string>& exprs, const SuiteOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  auto subjects = make_subjects(exprs);
  const std::size_t catalog_size = exprs.size();

  std::vector<const Check*> active;
  if (options.only_checks.empty()) {
    for (const auto& c : registry()) active.push_back(&c);
  } else {
    for (const auto& id : options.only_checks) {
      const Check* c = find_check(id);
      if (!c) throw Error("unknown check id: " + id);
      active.push_back(c);
    }
  }

  struct Task {
    const Check* check;
    const Subject* subject;
  };
  std::vector<Task> tasks;
  for (const Check* check : active) {
    for (std::size_t i = 0; i < subjects.size(); ++i) {
      bool synthesized = i >= catalog_size;
      if (applicable(*check, *subjects[i], synthesized)) {
        tasks.push_back({check, subjects[i].get()});
      }
    }
  }

  SuiteReport report;
  report.checks = active.size();
  report.subjects = subjects.size();
  report.results.resize(tasks.size());
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      report.results[i] = run_one(*tasks[i].check, *tasks[i].subject);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        report.results[i] = run_one(*tasks[i].check, *tasks[i].subject);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

std::size_t SuiteReport::count(CheckStatus status) const {
  std::size_t n = 0;
  for (const auto& r : results) {
    if (r.status == status) ++n;
  }
  return n;
}

std::string to_json_line(const CheckResult& result) {
  nlohmann::json j;
  j["check"] = result.check_id;
  j["subject"] = result.subject;
  j["status"] = to_string(result.status);
  if (!result.reason.empty()) j["reason"] = result.reason;
  if (result.witness) {
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [k, v] : result.witness->slots) w[k] = v;
    if (!result.witness->tag.empty()) w["tag"] = result.witness->tag;
    j["witness"] = w;
  }
  if (!result.note.empty()) j["note"] = result.note;
  j["elapsed_ms"] = result.elapsed_ms;
  return j.dump();
}

std::string summary_json(const SuiteReport& report) {
  nlohmann::json j;
  j["summary"] = {
      {"checks", report.checks},
      {"subjects", report.subjects},
      {"results", report.results.size()},
      {"pass", report.count(CheckStatus::pass)},
      {"fail", report.count(CheckStatus::fail)},
      {"skipped", report.count(CheckStatus::skipped)},
      {"elapsed_ms", report.elapsed_ms},
  };
  return j.dump();
}

const char* default_catalog_text() { return kDefaultCatalog; }

std::vector<std::string> default_catalog() {
  return parse_catalog_text(default_catalog_text());
}

}  // namespace finring
