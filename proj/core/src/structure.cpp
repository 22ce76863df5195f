#include "finring/structure.hpp"

#include <mutex>
#include <unordered_map>

#include "finring/construct.hpp"

namespace finring {

namespace {

struct UnitInfo {
  std::vector<std::uint8_t> mask;
  std::vector<elem> inverse;
  std::vector<elem> list;
};

UnitInfo unit_info(const FiniteRing& R) {
  const std::size_t n = R.order();
  UnitInfo u;
  u.mask.assign(n, 0);
  u.inverse.assign(n, R.zero());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (R.mul(static_cast<elem>(a), static_cast<elem>(b)) == R.one() &&
          R.mul(static_cast<elem>(b), static_cast<elem>(a)) == R.one()) {
        u.mask[a] = 1;
        u.inverse[a] = static_cast<elem>(b);
        u.list.push_back(static_cast<elem>(a));
        break;
      }
    }
  }
  return u;
}

std::vector<std::uint8_t> jacobson_mask(const FiniteRing& R,
                                        const std::vector<std::uint8_t>& unit_mask) {
  const std::size_t n = R.order();
  std::vector<std::uint8_t> mask(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool in = true;
    for (std::size_t r = 0; r < n; ++r) {
      elem ra = R.mul(static_cast<elem>(r), static_cast<elem>(a));
      if (!unit_mask[R.sub(R.one(), ra)]) {
        in = false;
        break;
      }
    }
    if (in) mask[a] = 1;
  }
  return mask;
}

}  // namespace

ElemSet units(const FiniteRing& ring) {
  return ElemSet::from_mask(unit_info(ring).mask);
}

ElemSet idempotents(const FiniteRing& ring) {
  std::vector<std::uint8_t> mask(ring.order(), 0);
  for (std::size_t e = 0; e < ring.order(); ++e) {
    if (ring.mul(static_cast<elem>(e), static_cast<elem>(e)) == e) mask[e] = 1;
  }
  return ElemSet::from_mask(std::move(mask));
}

ElemSet nilpotents(const FiniteRing& ring) {
  std::vector<std::uint8_t> mask(ring.order(), 0);
  for (std::size_t a = 0; a < ring.order(); ++a) {
    for (elem p : power_orbit(ring, static_cast<elem>(a))) {
      if (p == ring.zero()) {
        mask[a] = 1;
        break;
      }
    }
  }
  return ElemSet::from_mask(std::move(mask));
}

ElemSet jacobson_radical(const FiniteRing& ring) {
  auto u = unit_info(ring);
  auto mask = jacobson_mask(ring, u.mask);
  ElemSet J = ElemSet::from_mask(std::move(mask));
  if (!is_two_sided_ideal(ring, J)) {
    throw InternalInconsistency("computed Jacobson radical of " + ring.label() +
                                " is not a two-sided ideal");
  }
  return J;
}

ElemSet j_sharp(const FiniteRing& ring) {
  auto u = unit_info(ring);
  auto jmask = jacobson_mask(ring, u.mask);
  std::vector<std::uint8_t> mask(ring.order(), 0);
  for (std::size_t z = 0; z < ring.order(); ++z) {
    for (elem p : power_orbit(ring, static_cast<elem>(z))) {
      if (jmask[p]) {
        mask[z] = 1;
        break;
      }
    }
  }
  return ElemSet::from_mask(std::move(mask));
}

ElemSet quasi_nilpotents(const FiniteRing& ring) {
  auto u = unit_info(ring);
  const std::size_t n = ring.order();
  std::vector<std::uint8_t> mask(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool in = true;
    for (std::size_t x = 0; x < n; ++x) {
      elem ax = ring.mul(static_cast<elem>(a), static_cast<elem>(x));
      if (ax != ring.mul(static_cast<elem>(x), static_cast<elem>(a))) continue;
      if (!u.mask[ring.sub(ring.one(), ax)]) {
        in = false;
        break;
      }
    }
    if (in) mask[a] = 1;
  }
  return ElemSet::from_mask(std::move(mask));
}

ElemSet delta_nilpotents(const FiniteRing& ring) {
  auto u = unit_info(ring);
  const std::size_t n = ring.order();
  std::vector<std::uint8_t> mask(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool in = true;
    for (elem v : u.list) {
      elem av = ring.mul(static_cast<elem>(a), v);
      if (av != ring.mul(v, static_cast<elem>(a))) continue;
      if (!u.mask[ring.sub(ring.one(), av)]) {
        in = false;
        break;
      }
    }
    if (in) mask[a] = 1;
  }
  return ElemSet::from_mask(std::move(mask));
}

ElemSet jacobson_radical_two_sided(const FiniteRing& ring) {
  auto u = unit_info(ring);
  const std::size_t n = ring.order();
  // P = {m : 1 - m*s is a unit for every s}
  std::vector<std::uint8_t> p(n, 0);
  for (std::size_t m = 0; m < n; ++m) {
    bool in = true;
    for (std::size_t s = 0; s < n; ++s) {
      if (!u.mask[ring.sub(ring.one(), ring.mul(static_cast<elem>(m), static_cast<elem>(s)))]) {
        in = false;
        break;
      }
    }
    if (in) p[m] = 1;
  }
  std::vector<std::uint8_t> mask(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool in = true;
    for (std::size_t r = 0; r < n; ++r) {
      if (!p[ring.mul(static_cast<elem>(r), static_cast<elem>(a))]) {
        in = false;
        break;
      }
    }
    if (in) mask[a] = 1;
  }
  return ElemSet::from_mask(std::move(mask));
}

StructuralSets compute_structural_sets_fresh(const FiniteRing& ring) {
  const std::size_t n = ring.order();
  StructuralSets s;
  auto u = unit_info(ring);
  s.unit_inverse = u.inverse;
  s.units = ElemSet::from_mask(u.mask);

  {
    std::vector<std::uint8_t> mask(n, 0);
    for (std::size_t e = 0; e < n; ++e) {
      if (ring.mul(static_cast<elem>(e), static_cast<elem>(e)) == e) mask[e] = 1;
    }
    s.idempotents = ElemSet::from_mask(std::move(mask));
  }

  auto jmask = jacobson_mask(ring, u.mask);
  s.jacobson = ElemSet::from_mask(jmask);
  if (!is_two_sided_ideal(ring, s.jacobson)) {
    throw InternalInconsistency("computed Jacobson radical of " + ring.label() +
                                " is not a two-sided ideal");
  }

  {
    std::vector<std::uint8_t> nil(n, 0), sharp(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (elem p : power_orbit(ring, static_cast<elem>(a))) {
        if (p == ring.zero()) nil[a] = 1;
        if (jmask[p]) sharp[a] = 1;
      }
    }
    s.nilpotents = ElemSet::from_mask(std::move(nil));
    s.j_sharp = ElemSet::from_mask(std::move(sharp));
  }

  {
    std::vector<std::uint8_t> qn(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      bool in = true;
      for (std::size_t x = 0; x < n && in; ++x) {
        elem ax = ring.mul(static_cast<elem>(a), static_cast<elem>(x));
        if (ax != ring.mul(static_cast<elem>(x), static_cast<elem>(a))) continue;
        if (!u.mask[ring.sub(ring.one(), ax)]) in = false;
      }
      if (in) qn[a] = 1;
    }
    s.quasi_nilpotents = ElemSet::from_mask(std::move(qn));
  }

  {
    std::vector<std::uint8_t> dn(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      bool in = true;
      for (elem v : u.list) {
        elem av = ring.mul(static_cast<elem>(a), v);
        if (av != ring.mul(v, static_cast<elem>(a))) continue;
        if (!u.mask[ring.sub(ring.one(), av)]) {
          in = false;
          break;
        }
      }
      if (in) dn[a] = 1;
    }
    s.delta_nilpotents = ElemSet::from_mask(std::move(dn));
  }

  // Cross-set sanity: violations mean the input is not actually a ring
  // (or there is a bug here).
  auto check = [&](bool ok, const char* what) {
    if (!ok) {
      throw InternalInconsistency(std::string("structural sets of ") + ring.label() +
                                  ": " + what);
    }
  };
  check(s.jacobson.subset_of(s.j_sharp), "J not inside J#");
  check(s.nilpotents.subset_of(s.j_sharp), "Nil not inside J#");
  check(s.jacobson.subset_of(s.quasi_nilpotents), "J not inside QN");
  check(s.nilpotents.subset_of(s.quasi_nilpotents), "Nil not inside QN");
  check(s.quasi_nilpotents.subset_of(s.delta_nilpotents), "QN not inside DN");
  check(s.units.contains(ring.one()), "1 not a unit");
  for (const ElemSet* t : {&s.nilpotents, &s.jacobson, &s.j_sharp,
                           &s.quasi_nilpotents, &s.delta_nilpotents}) {
    check(t->contains(ring.zero()), "0 missing from a radical-like set");
  }
  if (!ring.is_trivial()) {
    for (const ElemSet* t : {&s.nilpotents, &s.jacobson, &s.j_sharp,
                             &s.quasi_nilpotents, &s.delta_nilpotents}) {
      check(!t->contains(ring.one()), "1 inside a radical-like set");
    }
    for (elem z : s.j_sharp) check(!s.units.contains(z), "unit inside J#");
  }
  return s;
}

namespace {
std::mutex g_memo_mutex;
std::unordered_map<std::string, SetsPtr>& memo() {
  static std::unordered_map<std::string, SetsPtr> m;
  return m;
}
}  // namespace

SetsPtr compute_structural_sets(const FiniteRing& ring) {
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = memo().find(ring.content_hash());
    if (it != memo().end()) return it->second;
  }
  auto computed = std::make_shared<const StructuralSets>(compute_structural_sets_fresh(ring));
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  auto [it, inserted] = memo().emplace(ring.content_hash(), computed);
  return it->second;  // concurrent duplicate computation resolves to one value
}

void clear_structural_memo() {
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  memo().clear();
}

}  // namespace finring
