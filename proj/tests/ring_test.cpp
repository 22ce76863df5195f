#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <tuple>

#include "finring/parse.hpp"
#include "finring/ring.hpp"

using namespace finring;

namespace {

std::vector<elem> zn_add(std::size_t n) {
  std::vector<elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<elem>((i + j) % n);
  return t;
}

std::vector<elem> zn_mul(std::size_t n) {
  std::vector<elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<elem>((i * j) % n);
  return t;
}

// Literal triple-loop law evaluation, independent of the validator.
bool laws_hold_exhaustively(const FiniteRing& R) {
  const std::size_t n = R.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        elem ea = static_cast<elem>(a), eb = static_cast<elem>(b),
             ec = static_cast<elem>(c);
        if (R.add(R.add(ea, eb), ec) != R.add(ea, R.add(eb, ec))) return false;
        if (R.mul(R.mul(ea, eb), ec) != R.mul(ea, R.mul(eb, ec))) return false;
        if (R.mul(ea, R.add(eb, ec)) != R.add(R.mul(ea, eb), R.mul(ea, ec))) return false;
        if (R.mul(R.add(ea, eb), ec) != R.add(R.mul(ea, ec), R.mul(eb, ec))) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("Z4 tables validate") {
  FiniteRing r = FiniteRing::make(4, zn_add(4), zn_mul(4), 0, 1, "Z4");
  CHECK(r.order() == 4);
  CHECK(r.add(3, 2) == 1);
  CHECK(r.mul(3, 3) == 1);
  CHECK(r.neg(1) == 3);
  CHECK(r.sub(1, 3) == 2);
  CHECK(r.pow(3, 2) == 1);
  CHECK_FALSE(r.is_trivial());
}

TEST_CASE("perturbed Z4 multiplication is rejected with a concrete witness") {
  auto add = zn_add(4);
  auto mul = zn_mul(4);
  mul[2 * 4 + 2] = 1;  // 2*2 = 1 instead of 0
  auto violation = find_axiom_violation(4, add, mul, 0, 1);
  REQUIRE(violation.has_value());
  CHECK((violation->axiom == RingAxiom::left_distributivity ||
         violation->axiom == RingAxiom::right_distributivity ||
         violation->axiom == RingAxiom::multiplicative_associativity));
  // The witness triple really violates the named law.
  auto A = [&](std::size_t a, std::size_t b) { return add[a * 4 + b]; };
  auto M = [&](std::size_t a, std::size_t b) { return mul[a * 4 + b]; };
  auto [a, b, c] = std::tuple{violation->triple[0], violation->triple[1],
                              violation->triple[2]};
  bool reproduced = false;
  switch (violation->axiom) {
    case RingAxiom::left_distributivity:
      reproduced = M(a, A(b, c)) != A(M(a, b), M(a, c));
      break;
    case RingAxiom::right_distributivity:
      reproduced = M(A(a, b), c) != A(M(a, c), M(b, c));
      break;
    case RingAxiom::multiplicative_associativity:
      reproduced = M(M(a, b), c) != M(a, M(b, c));
      break;
    default:
      break;
  }
  CHECK(reproduced);
  CHECK_THROWS_AS(FiniteRing::make(4, add, mul, 0, 1, "bad"), AxiomViolation);
}

TEST_CASE("order-1 tables make the trivial ring") {
  FiniteRing r = FiniteRing::make(1, {0}, {0}, 0, 0, "Z1");
  CHECK(r.is_trivial());
  CHECK(r.zero() == r.one());
}

TEST_CASE("zero = one is rejected beyond order 1") {
  auto v = find_axiom_violation(4, zn_add(4), zn_mul(4), 0, 0);
  REQUIRE(v.has_value());
  CHECK(v->axiom == RingAxiom::zero_one_distinct);
}

TEST_CASE("malformed tables are rejected") {
  CHECK_THROWS_AS(FiniteRing::make(4, zn_add(4), zn_mul(3), 0, 1, "bad"),
                  IndexOutOfRange);
  auto add = zn_add(4);
  add[5] = 9;
  CHECK_THROWS_AS(FiniteRing::make(4, add, zn_mul(4), 0, 1, "bad"), IndexOutOfRange);
}

TEST_CASE("generator-reduced validation agrees with sampled exhaustive laws") {
  // Z300 is past the full-scan threshold, so validation runs through
  // additive generators; cross-check a sample of laws directly.
  auto built = build_from_expr("Z300");
  const FiniteRing& r = *built.ring;
  CHECK(r.order() == 300);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, 299);
  for (int i = 0; i < 2000; ++i) {
    elem a = static_cast<elem>(pick(rng)), b = static_cast<elem>(pick(rng)),
         c = static_cast<elem>(pick(rng));
    CHECK(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)));
    CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
    CHECK(r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c)));
    CHECK(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
  }
}

TEST_CASE("generator-reduced validation still catches single-entry corruption") {
  const std::size_t n = 300;
  auto add = zn_add(n);
  auto mul = zn_mul(n);
  SUBCASE("corrupt mul") { mul[137 * n + 201] = 5; }
  SUBCASE("corrupt add") { add[298 * n + 7] = 0; }
  auto v = find_axiom_violation(n, add, mul, 0, 1);
  CHECK(v.has_value());
}

TEST_CASE("power_orbit matches the worked examples") {
  auto z4 = build_from_expr("Z4");
  CHECK(power_orbit(*z4.ring, 2) == std::vector<elem>{2, 0});
  CHECK(power_orbit(*z4.ring, 1) == std::vector<elem>{1});
  auto z8 = build_from_expr("Z8");
  CHECK(power_orbit(*z8.ring, 3) == std::vector<elem>{3, 1});
}

TEST_CASE("power_orbit is bounded and cycles back") {
  for (const char* expr : {"Z6", "M2(Z2)", "T2(Z2)", "GR(Z2,C2)"}) {
    auto built = build_from_expr(expr);
    const FiniteRing& R = *built.ring;
    for (std::size_t a = 0; a < R.order(); ++a) {
      auto orbit = power_orbit(R, static_cast<elem>(a));
      CHECK(orbit.size() <= R.order() + 1);
      // the next power after the last entry was already seen
      elem next = R.mul(orbit.back(), static_cast<elem>(a));
      CHECK(std::find(orbit.begin(), orbit.end(), next) != orbit.end());
    }
  }
}

TEST_CASE("annihilators match the worked examples") {
  auto z4 = build_from_expr("Z4");
  CHECK(left_annihilator(*z4.ring, 2).members() == std::vector<elem>{0, 2});
  CHECK(left_annihilator(*z4.ring, 1).members() == std::vector<elem>{0});
  CHECK(left_annihilator(*z4.ring, 0).members() == std::vector<elem>{0, 1, 2, 3});
}

TEST_CASE("annihilators are additive subgroups") {
  for (const char* expr : {"Z4", "Z6", "M2(Z2)", "T2(Z4)"}) {
    auto built = build_from_expr(expr);
    const FiniteRing& R = *built.ring;
    for (std::size_t a = 0; a < R.order(); ++a) {
      for (const ElemSet& ann : {left_annihilator(R, static_cast<elem>(a)),
                                 right_annihilator(R, static_cast<elem>(a))}) {
        CHECK(ann.contains(R.zero()));
        for (elem x : ann) {
          CHECK(ann.contains(R.neg(x)));
          for (elem y : ann) CHECK(ann.contains(R.add(x, y)));
        }
      }
    }
  }
}

TEST_CASE("center of commutative and matrix rings") {
  auto z4 = build_from_expr("Z4");
  CHECK(center(*z4.ring).members() == std::vector<elem>{0, 1, 2, 3});

  // The scalar matrices 0 and I; entry order (e00,e01,e10,e11), so
  // I = (1,0,0,1) has index 1*8 + 0 + 0 + 1 = 9.
  auto m2 = build_from_expr("M2(Z2)");
  CHECK(center(*m2.ring).members() == std::vector<elem>{0, 9});

  // T2 stores (e00,e01,e11): I = (1,0,1) -> index 5.
  auto t2 = build_from_expr("T2(Z2)");
  CHECK(center(*t2.ring).members() == std::vector<elem>{0, 5});
}

TEST_CASE("validated rings satisfy the exhaustive laws (small orders)") {
  for (const char* expr : {"Z1", "Z6", "M2(Z2)", "T2(Z2)", "GR(Z2,C2)", "K(Z2,1)"}) {
    auto built = build_from_expr(expr);
    CHECK(laws_hold_exhaustively(*built.ring));
  }
}

TEST_CASE("order cap configuration") {
  std::size_t before = order_cap();
  CHECK_THROWS_AS(set_order_cap(0), SizeExceeded);
  CHECK_THROWS_AS(set_order_cap(kMaxOrder + 1), SizeExceeded);
  set_order_cap(64);
  CHECK_THROWS_AS(build_from_expr("Z100"), SizeExceeded);
  set_order_cap(before);
  CHECK(build_from_expr("Z100").ring->order() == 100);
}

TEST_CASE("content hash keys the tables, not the label") {
  FiniteRing a = FiniteRing::make(4, zn_add(4), zn_mul(4), 0, 1, "Z4");
  FiniteRing b = FiniteRing::make(4, zn_add(4), zn_mul(4), 0, 1, "another-name");
  CHECK(a.content_hash() == b.content_hash());
  auto z2 = build_from_expr("Z2");
  CHECK(a.content_hash() != z2.ring->content_hash());
  CHECK(a.content_hash().size() == 64);
}
