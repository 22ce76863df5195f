#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finring/construct.hpp"
#include "finring/parse.hpp"
#include "finring/structure.hpp"

using namespace finring;

namespace {

// Literal double-loop oracle for the two-sided radical description,
// independent of the library's factored evaluation.
ElemSet two_sided_radical_oracle(const FiniteRing& R) {
  ElemSet U = units(R);
  std::vector<std::uint8_t> mask(R.order(), 0);
  for (std::size_t a = 0; a < R.order(); ++a) {
    bool in = true;
    for (std::size_t r = 0; r < R.order() && in; ++r) {
      for (std::size_t s = 0; s < R.order(); ++s) {
        elem ras = R.mul(R.mul(static_cast<elem>(r), static_cast<elem>(a)),
                         static_cast<elem>(s));
        if (!U.contains(R.sub(R.one(), ras))) {
          in = false;
          break;
        }
      }
    }
    if (in) mask[a] = 1;
  }
  return ElemSet::from_mask(std::move(mask));
}

const std::vector<std::string>& small_rings() {
  static const std::vector<std::string> exprs = {
      "Z1",     "Z2",          "Z3",      "Z4",      "Z6",        "Z8",
      "prod(Z2,Z2)", "prod(Z2,Z4)", "M2(Z2)", "T2(Z2)", "T2(Z4)", "T3(Z2)",
      "GR(Z2,C2)",   "GR(Z2,C3)",   "GR(Z2,S3)", "GR(Z4,C3)"};
  return exprs;
}

}  // namespace

TEST_CASE("Z4 structural sets") {
  auto r = build_from_expr("Z4");
  auto s = compute_structural_sets(*r.ring);
  CHECK(s->units.members() == std::vector<elem>{1, 3});
  CHECK(s->idempotents.members() == std::vector<elem>{0, 1});
  CHECK(s->nilpotents.members() == std::vector<elem>{0, 2});
  CHECK(s->jacobson.members() == std::vector<elem>{0, 2});
  CHECK(s->j_sharp.members() == std::vector<elem>{0, 2});
  CHECK(s->quasi_nilpotents.members() == std::vector<elem>{0, 2});
  CHECK(s->delta_nilpotents.members() == std::vector<elem>{0, 2});
  CHECK(s->unit_inverse[3] == 3);
  CHECK(s->unit_inverse[1] == 1);
}

TEST_CASE("Z2 structural sets") {
  auto r = build_from_expr("Z2");
  auto s = compute_structural_sets(*r.ring);
  CHECK(s->units.members() == std::vector<elem>{1});
  CHECK(s->idempotents.members() == std::vector<elem>{0, 1});
  for (const ElemSet* t : {&s->nilpotents, &s->jacobson, &s->j_sharp,
                           &s->quasi_nilpotents, &s->delta_nilpotents}) {
    CHECK(t->members() == std::vector<elem>{0});
  }
}

TEST_CASE("trivial ring: every set is {0}") {
  auto r = build_from_expr("Z1");
  auto s = compute_structural_sets(*r.ring);
  for (const ElemSet* t : {&s->units, &s->idempotents, &s->nilpotents, &s->jacobson,
                           &s->j_sharp, &s->quasi_nilpotents, &s->delta_nilpotents}) {
    CHECK(t->members() == std::vector<elem>{0});
  }
}

TEST_CASE("semisimple examples") {
  auto z6 = build_from_expr("Z6");
  CHECK(nilpotents(*z6.ring).members() == std::vector<elem>{0});
  CHECK(jacobson_radical(*z6.ring).members() == std::vector<elem>{0});
  CHECK(units(*z6.ring).members() == std::vector<elem>{1, 5});
  CHECK(idempotents(*z6.ring).members() == std::vector<elem>{0, 1, 3, 4});

  // In a field, 1 - a a^{-1} = 0 rules every nonzero element out of QN.
  auto z3 = build_from_expr("Z3");
  CHECK(quasi_nilpotents(*z3.ring).members() == std::vector<elem>{0});
  auto z2 = build_from_expr("Z2");
  CHECK(delta_nilpotents(*z2.ring).members() == std::vector<elem>{0});
}

TEST_CASE("matrix ring sets") {
  auto m2 = build_from_expr("M2(Z2)");
  auto s = compute_structural_sets(*m2.ring);
  CHECK(s->units.size() == 6);
  CHECK(s->idempotents.size() == 8);
  CHECK(s->nilpotents.size() == 4);
  CHECK(s->jacobson.members() == std::vector<elem>{0});
  CHECK(s->j_sharp == s->nilpotents);          // J = 0
  CHECK(s->quasi_nilpotents == s->nilpotents);  // brute force over commuting pairs
}

TEST_CASE("triangular ring sets") {
  auto t2 = build_from_expr("T2(Z2)");
  auto s = compute_structural_sets(*t2.ring);
  // stored digits (e00, e01, e11): E12 has index 2, I has index 5.
  CHECK(s->jacobson.members() == std::vector<elem>{0, 2});
  CHECK(s->j_sharp.members() == std::vector<elem>{0, 2});
  CHECK(s->units.size() == 2);
  // golden fixture from the exhaustive scan
  CHECK(s->delta_nilpotents.members() == std::vector<elem>{0, 2});

  auto t2z4 = build_from_expr("T2(Z4)");
  auto s4 = compute_structural_sets(*t2z4.ring);
  CHECK(s4->jacobson.size() == 16);
  CHECK(s4->j_sharp.size() == 16);
  CHECK(s4->units.size() == 16);
}

TEST_CASE("radical agrees with the literal two-sided oracle") {
  for (const auto& expr : small_rings()) {
    auto built = build_from_expr(expr);
    ElemSet primary = jacobson_radical(*built.ring);
    ElemSet factored = jacobson_radical_two_sided(*built.ring);
    ElemSet literal = two_sided_radical_oracle(*built.ring);
    CHECK_MESSAGE(primary == literal, expr);
    CHECK_MESSAGE(factored == literal, expr);
  }
}

TEST_CASE("inclusion chains hold on every small ring") {
  for (const auto& expr : small_rings()) {
    auto built = build_from_expr(expr);
    auto s = compute_structural_sets(*built.ring);
    CHECK_MESSAGE(s->jacobson.subset_of(s->j_sharp), expr);
    CHECK_MESSAGE(s->nilpotents.subset_of(s->j_sharp), expr);
    CHECK_MESSAGE(s->jacobson.subset_of(s->quasi_nilpotents), expr);
    CHECK_MESSAGE(s->nilpotents.subset_of(s->quasi_nilpotents), expr);
    CHECK_MESSAGE(s->quasi_nilpotents.subset_of(s->delta_nilpotents), expr);
    if (!built.ring->is_trivial()) {
      for (elem z : s->j_sharp) CHECK_FALSE(s->units.contains(z));
    }
  }
}

TEST_CASE("J# closure properties") {
  for (const auto& expr : small_rings()) {
    auto built = build_from_expr(expr);
    const FiniteRing& R = *built.ring;
    auto s = compute_structural_sets(R);
    for (elem a : s->j_sharp) {
      CHECK(s->j_sharp.contains(R.neg(a)));
      for (elem b : s->jacobson) CHECK(s->j_sharp.contains(R.add(a, b)));
      for (elem u : s->units) {
        CHECK(s->j_sharp.contains(R.mul(R.mul(u, a), s->unit_inverse[u])));
      }
    }
  }
}

TEST_CASE("J# of a product is componentwise") {
  auto z2 = build_from_expr("Z2");
  auto z4 = build_from_expr("Z4");
  auto p = build_from_expr("prod(Z2,Z4)");
  const auto* codec = dynamic_cast<const TupleCodec*>(p.codec.get());
  auto sp = compute_structural_sets(*p.ring);
  auto s2 = compute_structural_sets(*z2.ring);
  auto s4 = compute_structural_sets(*z4.ring);
  for (std::size_t x = 0; x < p.ring->order(); ++x) {
    auto parts = codec->parts(static_cast<elem>(x));
    bool expected = s2->j_sharp.contains(parts[0]) && s4->j_sharp.contains(parts[1]);
    CHECK(sp->j_sharp.contains(static_cast<elem>(x)) == expected);
  }
}

TEST_CASE("corner rings compute J# compatibly") {
  for (const char* expr : {"M2(Z2)", "T2(Z4)", "prod(Z2,Z4)"}) {
    auto built = build_from_expr(expr);
    const FiniteRing& R = *built.ring;
    auto s = compute_structural_sets(R);
    for (elem e : s->idempotents) {
      CornerRing corner = corner_ring(built, e);
      auto cs = compute_structural_sets(*corner.built.ring);
      // J#(eRe) = eRe n J#(R)
      for (std::size_t i = 0; i < corner.built.ring->order(); ++i) {
        bool own = cs->j_sharp.contains(static_cast<elem>(i));
        bool meet = s->j_sharp.contains(corner.embed[i]);
        CHECK(own == meet);
      }
      // commuting squeeze lands in J#(eRe)
      for (elem z : s->j_sharp) {
        if (R.mul(e, z) != R.mul(z, e)) continue;
        elem eze = R.mul(R.mul(e, z), e);
        bool found = false;
        for (std::size_t i = 0; i < corner.built.ring->order(); ++i) {
          if (corner.embed[i] == eze) {
            found = cs->j_sharp.contains(static_cast<elem>(i));
            break;
          }
        }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("memoization returns the shared computation") {
  auto a = build_from_expr("T2(Z4)");
  auto b = build_from_expr("T2(Z4)");  // distinct tables, same content
  auto sa = compute_structural_sets(*a.ring);
  auto sb = compute_structural_sets(*b.ring);
  CHECK(sa.get() == sb.get());
  CHECK(compute_structural_sets_fresh(*a.ring).units == sa->units);
}

TEST_CASE("standalone set functions agree with the facade") {
  for (const char* expr : {"Z6", "M2(Z2)", "GR(Z2,C2)"}) {
    auto built = build_from_expr(expr);
    auto s = compute_structural_sets(*built.ring);
    CHECK(units(*built.ring) == s->units);
    CHECK(idempotents(*built.ring) == s->idempotents);
    CHECK(nilpotents(*built.ring) == s->nilpotents);
    CHECK(jacobson_radical(*built.ring) == s->jacobson);
    CHECK(j_sharp(*built.ring) == s->j_sharp);
    CHECK(quasi_nilpotents(*built.ring) == s->quasi_nilpotents);
    CHECK(delta_nilpotents(*built.ring) == s->delta_nilpotents);
  }
}
