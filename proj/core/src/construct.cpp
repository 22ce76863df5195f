#include "finring/construct.hpp"

#include <algorithm>
#include <sstream>

namespace finring {

namespace {

// order^exp when it stays within the cap, nullopt otherwise.
std::optional<std::size_t> pow_within_cap(std::size_t base, std::size_t exp) {
  const std::size_t cap = order_cap();
  if (base == 0) return std::nullopt;
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return std::nullopt;
    r *= base;
  }
  return r;
}

[[noreturn]] void throw_size(const std::string& what) {
  std::ostringstream os;
  os << what << " exceeds order cap " << order_cap();
  throw SizeExceeded(os.str());
}

RingPtr freeze(FiniteRing ring) {
  return std::make_shared<const FiniteRing>(std::move(ring));
}

}  // namespace

BuiltRing ring_Zn(std::size_t n) {
  if (n == 0) throw ElementOutOfRange("Zn requires n >= 1");
  if (n > order_cap()) throw_size("Z" + std::to_string(n));
  std::vector<elem> add(n * n), mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      add[i * n + j] = static_cast<elem>((i + j) % n);
      mul[i * n + j] = static_cast<elem>((i * j) % n);
    }
  }
  elem one = n == 1 ? 0 : 1;
  auto ring = freeze(FiniteRing::make(n, std::move(add), std::move(mul), 0, one,
                                      "Z" + std::to_string(n)));
  return {ring, std::make_shared<ZnCodec>(n)};
}

BuiltRing direct_product(const std::vector<BuiltRing>& factors) {
  if (factors.empty()) throw ElementOutOfRange("prod requires at least one factor");
  const std::size_t cap = order_cap();
  std::size_t n = 1;
  std::vector<std::size_t> orders;
  std::vector<CodecPtr> codecs;
  std::string label = "prod(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::size_t m = factors[i].ring->order();
    if (m != 0 && n > cap / m) throw_size("direct product");
    n *= m;
    orders.push_back(m);
    codecs.push_back(factors[i].codec);
    if (i) label += ",";
    label += factors[i].ring->label();
  }
  label += ")";

  const std::size_t k = factors.size();
  // Decode every index once.
  std::vector<elem> digits(n * k);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t v = x;
    for (std::size_t i = k; i-- > 0;) {
      digits[x * k + i] = static_cast<elem>(v % orders[i]);
      v /= orders[i];
    }
  }
  std::vector<elem> add(n * n), mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t a = 0, m = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const FiniteRing& Ri = *factors[i].ring;
        a = a * orders[i] + Ri.add(digits[x * k + i], digits[y * k + i]);
        m = m * orders[i] + Ri.mul(digits[x * k + i], digits[y * k + i]);
      }
      add[x * n + y] = static_cast<elem>(a);
      mul[x * n + y] = static_cast<elem>(m);
    }
  }
  std::vector<elem> zero_digits(k), one_digits(k);
  for (std::size_t i = 0; i < k; ++i) {
    zero_digits[i] = factors[i].ring->zero();
    one_digits[i] = factors[i].ring->one();
  }
  std::size_t zero = 0, one = 0;
  for (std::size_t i = 0; i < k; ++i) {
    zero = zero * orders[i] + zero_digits[i];
    one = one * orders[i] + one_digits[i];
  }
  auto ring = freeze(FiniteRing::make(n, std::move(add), std::move(mul),
                                      static_cast<elem>(zero), static_cast<elem>(one),
                                      std::move(label)));
  return {ring, std::make_shared<TupleCodec>(std::move(codecs), std::move(orders))};
}

namespace {

BuiltRing build_matrix_like(const BuiltRing& base, std::size_t k, bool triangular) {
  if (k == 0) throw ElementOutOfRange("matrix dimension must be >= 1");
  const FiniteRing& B = *base.ring;
  const std::size_t m = B.order();
  const std::size_t stored = triangular ? k * (k + 1) / 2 : k * k;
  auto order = pow_within_cap(m, stored);
  std::string label = (triangular ? "T" : "M") + std::to_string(k) + "(" + B.label() + ")";
  if (!order) throw_size(label);
  const std::size_t n = *order;

  // Stored position of (r,c); full matrices store everything.
  std::vector<std::size_t> pos(k * k, std::size_t(-1));
  {
    std::size_t p = 0;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) {
        if (!triangular || r <= c) pos[r * k + c] = p++;
      }
  }
  auto entry = [&](const std::vector<elem>& digits, std::size_t x, std::size_t r,
                   std::size_t c) -> elem {
    std::size_t p = pos[r * k + c];
    return p == std::size_t(-1) ? B.zero() : digits[x * stored + p];
  };

  std::vector<elem> digits(n * stored);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t v = x;
    for (std::size_t i = stored; i-- > 0;) {
      digits[x * stored + i] = static_cast<elem>(v % m);
      v /= m;
    }
  }

  std::vector<elem> add(n * n), mul(n * n);
  std::vector<elem> out(stored);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      // addition
      std::size_t av = 0;
      for (std::size_t i = 0; i < stored; ++i) {
        av = av * m + B.add(digits[x * stored + i], digits[y * stored + i]);
      }
      add[x * n + y] = static_cast<elem>(av);
      // multiplication
      std::size_t mv = 0;
      std::size_t p = 0;
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
          if (triangular && r > c) continue;
          elem s = B.zero();
          for (std::size_t t = 0; t < k; ++t) {
            s = B.add(s, B.mul(entry(digits, x, r, t), entry(digits, y, t, c)));
          }
          out[p++] = s;
        }
      }
      for (std::size_t i = 0; i < stored; ++i) mv = mv * m + out[i];
      mul[x * n + y] = static_cast<elem>(mv);
    }
  }

  std::size_t zero = 0, one = 0;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) {
      if (triangular && r > c) continue;
      zero = zero * m + B.zero();
      one = one * m + (r == c ? B.one() : B.zero());
    }
  auto ring = freeze(FiniteRing::make(n, std::move(add), std::move(mul),
                                      static_cast<elem>(zero), static_cast<elem>(one),
                                      std::move(label)));
  CodecPtr codec;
  if (triangular) {
    codec = std::make_shared<TriangularCodec>(base.codec, m, k);
  } else {
    codec = std::make_shared<MatrixCodec>(base.codec, m, k);
  }
  return {ring, codec};
}

}  // namespace

BuiltRing matrix_ring(const BuiltRing& base, std::size_t k) {
  return build_matrix_like(base, k, false);
}

BuiltRing upper_triangular_ring(const BuiltRing& base, std::size_t k) {
  return build_matrix_like(base, k, true);
}

BuiltRing generalized_matrix_ring(const BuiltRing& base, elem s) {
  const FiniteRing& B = *base.ring;
  const std::size_t m = B.order();
  if (s >= m) throw ElementOutOfRange("multiplier index out of range");
  if (!center(B).contains(s)) {
    throw NotCentral("multiplier " + std::to_string(s) + " is not central in " + B.label());
  }
  std::string label = "K(" + B.label() + "," + std::to_string(s) + ")";
  auto order = pow_within_cap(m, 4);
  if (!order) throw_size(label);
  const std::size_t n = *order;

  std::vector<elem> digits(n * 4);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t v = x;
    for (std::size_t i = 4; i-- > 0;) {
      digits[x * 4 + i] = static_cast<elem>(v % m);
      v /= m;
    }
  }
  std::vector<elem> add(n * n), mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const elem a = digits[x * 4], b = digits[x * 4 + 1], c = digits[x * 4 + 2],
               d = digits[x * 4 + 3];
    for (std::size_t y = 0; y < n; ++y) {
      const elem a2 = digits[y * 4], b2 = digits[y * 4 + 1], c2 = digits[y * 4 + 2],
                 d2 = digits[y * 4 + 3];
      std::size_t av = ((std::size_t(B.add(a, a2)) * m + B.add(b, b2)) * m +
                        B.add(c, c2)) * m + B.add(d, d2);
      add[x * n + y] = static_cast<elem>(av);
      elem p0 = B.add(B.mul(a, a2), B.mul(s, B.mul(b, c2)));
      elem p1 = B.add(B.mul(a, b2), B.mul(b, d2));
      elem p2 = B.add(B.mul(c, a2), B.mul(d, c2));
      elem p3 = B.add(B.mul(s, B.mul(c, b2)), B.mul(d, d2));
      std::size_t mv = ((std::size_t(p0) * m + p1) * m + p2) * m + p3;
      mul[x * n + y] = static_cast<elem>(mv);
    }
  }
  std::size_t zero = ((std::size_t(B.zero()) * m + B.zero()) * m + B.zero()) * m + B.zero();
  std::size_t one = ((std::size_t(B.one()) * m + B.zero()) * m + B.zero()) * m + B.one();
  auto ring = freeze(FiniteRing::make(n, std::move(add), std::move(mul),
                                      static_cast<elem>(zero), static_cast<elem>(one),
                                      std::move(label)));
  return {ring, std::make_shared<QuadCodec>(base.codec, m, s)};
}

IdealSet ideal_generated_by(const RingPtr& ring, const std::vector<elem>& gens) {
  const FiniteRing& R = *ring;
  const std::size_t n = R.order();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<elem> members;
  auto insert = [&](elem x) {
    if (!seen[x]) {
      seen[x] = 1;
      members.push_back(x);
    }
  };
  insert(R.zero());
  for (elem g : gens) {
    if (g >= n) throw ElementOutOfRange("ideal generator index out of range");
    insert(g);
  }
  std::size_t head = 0;
  while (head < members.size()) {
    elem x = members[head++];
    insert(R.neg(x));
    for (std::size_t j = 0; j < members.size(); ++j) insert(R.add(x, members[j]));
    for (std::size_t r = 0; r < n; ++r) {
      insert(R.mul(static_cast<elem>(r), x));
      insert(R.mul(x, static_cast<elem>(r)));
    }
  }
  return {ring, ElemSet::from_members(n, std::move(members))};
}

bool is_two_sided_ideal(const FiniteRing& ring, const ElemSet& members) {
  if (!members.contains(ring.zero())) return false;
  for (elem x : members) {
    if (!members.contains(ring.neg(x))) return false;
    for (elem y : members) {
      if (!members.contains(ring.add(x, y))) return false;
    }
    for (std::size_t r = 0; r < ring.order(); ++r) {
      if (!members.contains(ring.mul(static_cast<elem>(r), x))) return false;
      if (!members.contains(ring.mul(x, static_cast<elem>(r)))) return false;
    }
  }
  return true;
}

QuotientRing quotient_ring(const BuiltRing& base, const IdealSet& ideal,
                           std::string label) {
  const FiniteRing& R = *base.ring;
  if (ideal.ring.get() != base.ring.get()) {
    throw NotAnIdeal("ideal belongs to a different ring");
  }
  if (!is_two_sided_ideal(R, ideal.members)) {
    throw NotAnIdeal("member set is not a two-sided ideal of " + R.label());
  }
  const std::size_t n = R.order();
  // Canonical representative: smallest index in the coset.
  std::vector<elem> rep(n);
  for (std::size_t x = 0; x < n; ++x) {
    elem best = static_cast<elem>(x);
    for (elem i : ideal.members) best = std::min(best, R.add(static_cast<elem>(x), i));
    rep[x] = best;
  }
  std::vector<elem> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (rep[x] == x) reps.push_back(static_cast<elem>(x));
  }
  std::vector<elem> project(n);
  for (std::size_t x = 0; x < n; ++x) {
    project[x] = static_cast<elem>(
        std::lower_bound(reps.begin(), reps.end(), rep[x]) - reps.begin());
  }
  const std::size_t q = reps.size();
  std::vector<elem> add(q * q), mul(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      add[i * q + j] = project[R.add(reps[i], reps[j])];
      mul[i * q + j] = project[R.mul(reps[i], reps[j])];
    }
  }
  if (label.empty()) label = R.label() + "/I";
  auto ring = freeze(FiniteRing::make(q, std::move(add), std::move(mul),
                                      project[R.zero()], project[R.one()],
                                      std::move(label)));
  auto codec = std::make_shared<SubsetCodec>(base.codec, n, SubsetCodec::Kind::quotient,
                                             reps);
  return {{ring, codec}, std::move(project)};
}

CornerRing corner_ring(const BuiltRing& base, elem e) {
  const FiniteRing& R = *base.ring;
  if (e >= R.order()) throw ElementOutOfRange("corner idempotent index out of range");
  if (R.mul(e, e) != e) {
    throw NotIdempotent("element " + std::to_string(e) + " is not idempotent in " +
                        R.label());
  }
  const std::size_t n = R.order();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<elem> embed;
  for (std::size_t x = 0; x < n; ++x) {
    elem v = R.mul(R.mul(e, static_cast<elem>(x)), e);
    if (!seen[v]) {
      seen[v] = 1;
      embed.push_back(v);
    }
  }
  std::sort(embed.begin(), embed.end());
  std::vector<elem> back(n, 0);
  for (std::size_t i = 0; i < embed.size(); ++i) back[embed[i]] = static_cast<elem>(i);
  const std::size_t q = embed.size();
  std::vector<elem> add(q * q), mul(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      add[i * q + j] = back[R.add(embed[i], embed[j])];
      mul[i * q + j] = back[R.mul(embed[i], embed[j])];
    }
  }
  std::string label = "corner(" + R.label() + "," + std::to_string(e) + ")";
  auto ring = freeze(FiniteRing::make(q, std::move(add), std::move(mul),
                                      back[R.zero()], back[e], std::move(label)));
  auto codec = std::make_shared<SubsetCodec>(base.codec, n, SubsetCodec::Kind::corner,
                                             embed);
  return {{ring, codec}, std::move(embed)};
}

BuiltRing group_ring(const BuiltRing& base, const GroupPtr& group) {
  const FiniteRing& B = *base.ring;
  const GroupTable& G = *group;
  const std::size_t m = B.order();
  const std::size_t g = G.order();
  std::string label = "GR(" + B.label() + "," + G.label() + ")";
  auto order = pow_within_cap(m, g);
  if (!order) throw_size(label);
  const std::size_t n = *order;

  std::vector<elem> digits(n * g);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t v = x;
    for (std::size_t i = g; i-- > 0;) {
      digits[x * g + i] = static_cast<elem>(v % m);
      v /= m;
    }
  }
  std::vector<elem> add(n * n), mul(n * n);
  std::vector<elem> conv(g);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t av = 0;
      for (std::size_t i = 0; i < g; ++i) {
        av = av * m + B.add(digits[x * g + i], digits[y * g + i]);
      }
      add[x * n + y] = static_cast<elem>(av);
      std::fill(conv.begin(), conv.end(), B.zero());
      for (std::size_t p = 0; p < g; ++p) {
        elem cx = digits[x * g + p];
        if (cx == B.zero()) continue;
        for (std::size_t r = 0; r < g; ++r) {
          elem cy = digits[y * g + r];
          if (cy == B.zero()) continue;
          elem target = G.op(static_cast<elem>(p), static_cast<elem>(r));
          conv[target] = B.add(conv[target], B.mul(cx, cy));
        }
      }
      std::size_t mv = 0;
      for (std::size_t i = 0; i < g; ++i) mv = mv * m + conv[i];
      mul[x * n + y] = static_cast<elem>(mv);
    }
  }
  std::size_t zero = 0, one = 0;
  for (std::size_t i = 0; i < g; ++i) {
    zero = zero * m + B.zero();
    one = one * m + (i == G.identity() ? B.one() : B.zero());
  }
  auto ring = freeze(FiniteRing::make(n, std::move(add), std::move(mul),
                                      static_cast<elem>(zero), static_cast<elem>(one),
                                      std::move(label)));
  return {ring, std::make_shared<GroupRingCodec>(base.codec, base.ring, group)};
}

const GroupRingCodec* group_ring_codec(const BuiltRing& built) {
  return dynamic_cast<const GroupRingCodec*>(built.codec.get());
}

elem augmentation(const BuiltRing& rg, elem x) {
  const auto* codec = group_ring_codec(rg);
  if (!codec) throw NotAGroupRing(rg.ring->label() + " has no group-ring codec");
  if (x >= rg.ring->order()) throw ElementOutOfRange("element index out of range");
  const FiniteRing& B = *codec->base_ring();
  elem acc = B.zero();
  for (elem c : codec->coefficients(x)) acc = B.add(acc, c);
  return acc;
}

IdealSet augmentation_ideal(const BuiltRing& rg) {
  const auto* codec = group_ring_codec(rg);
  if (!codec) throw NotAGroupRing(rg.ring->label() + " has no group-ring codec");
  std::vector<std::uint8_t> mask(rg.ring->order(), 0);
  const elem base_zero = codec->base_ring()->zero();
  for (std::size_t x = 0; x < rg.ring->order(); ++x) {
    if (augmentation(rg, static_cast<elem>(x)) == base_zero) mask[x] = 1;
  }
  IdealSet ideal{rg.ring, ElemSet::from_mask(std::move(mask))};
  if (!is_two_sided_ideal(*rg.ring, ideal.members)) {
    throw InternalInconsistency("augmentation kernel of " + rg.ring->label() +
                                " is not a two-sided ideal");
  }
  return ideal;
}

bool ConstructionAst::operator==(const ConstructionAst& other) const {
  return kind == other.kind && number == other.number && children == other.children &&
         generators == other.generators && group_name == other.group_name;
}

std::string canonical_text(const ConstructionAst& ast) {
  using Kind = ConstructionAst::Kind;
  std::ostringstream os;
  switch (ast.kind) {
    case Kind::zn:
      os << "Z" << ast.number;
      break;
    case Kind::product:
      os << "prod(";
      for (std::size_t i = 0; i < ast.children.size(); ++i) {
        if (i) os << ",";
        os << canonical_text(ast.children[i]);
      }
      os << ")";
      break;
    case Kind::matrix:
      os << "M" << ast.number << "(" << canonical_text(ast.children[0]) << ")";
      break;
    case Kind::triangular:
      os << "T" << ast.number << "(" << canonical_text(ast.children[0]) << ")";
      break;
    case Kind::gen_matrix:
      os << "K(" << canonical_text(ast.children[0]) << "," << ast.number << ")";
      break;
    case Kind::quotient: {
      os << "quot(" << canonical_text(ast.children[0]) << ",{";
      for (std::size_t i = 0; i < ast.generators.size(); ++i) {
        if (i) os << ",";
        os << ast.generators[i];
      }
      os << "})";
      break;
    }
    case Kind::corner:
      os << "corner(" << canonical_text(ast.children[0]) << "," << ast.number << ")";
      break;
    case Kind::group_ring:
      os << "GR(" << canonical_text(ast.children[0]) << "," << ast.group_name << ")";
      break;
  }
  return os.str();
}

BuiltRing eval_ast(const ConstructionAst& ast) {
  using Kind = ConstructionAst::Kind;
  switch (ast.kind) {
    case Kind::zn:
      return ring_Zn(ast.number);
    case Kind::product: {
      std::vector<BuiltRing> factors;
      factors.reserve(ast.children.size());
      for (const auto& c : ast.children) factors.push_back(eval_ast(c));
      return direct_product(factors);
    }
    case Kind::matrix:
      return matrix_ring(eval_ast(ast.children[0]), ast.number);
    case Kind::triangular:
      return upper_triangular_ring(eval_ast(ast.children[0]), ast.number);
    case Kind::gen_matrix: {
      BuiltRing base = eval_ast(ast.children[0]);
      if (ast.number >= base.ring->order()) {
        throw ElementOutOfRange("multiplier index " + std::to_string(ast.number) +
                                " out of range for " + base.ring->label());
      }
      return generalized_matrix_ring(base, static_cast<elem>(ast.number));
    }
    case Kind::quotient: {
      BuiltRing base = eval_ast(ast.children[0]);
      std::vector<elem> gens;
      for (std::size_t g : ast.generators) {
        if (g >= base.ring->order()) {
          throw ElementOutOfRange("generator index " + std::to_string(g) +
                                  " out of range for " + base.ring->label());
        }
        gens.push_back(static_cast<elem>(g));
      }
      auto ideal = ideal_generated_by(base.ring, gens);
      return quotient_ring(base, ideal, canonical_text(ast)).built;
    }
    case Kind::corner: {
      BuiltRing base = eval_ast(ast.children[0]);
      if (ast.number >= base.ring->order()) {
        throw ElementOutOfRange("idempotent index " + std::to_string(ast.number) +
                                " out of range for " + base.ring->label());
      }
      return corner_ring(base, static_cast<elem>(ast.number)).built;
    }
    case Kind::group_ring: {
      BuiltRing base = eval_ast(ast.children[0]);
      GroupPtr group;
      if (!ast.group_name.empty() && ast.group_name[0] == '@') {
        group = group_from_file(ast.group_name.substr(1));
      } else {
        group = builtin_group(ast.group_name);
      }
      return group_ring(base, group);
    }
  }
  throw Error("unreachable construction kind");
}

}  // namespace finring
