#include "finring/group.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace finring {

namespace {

// Groups enter ring constructions through |R|^|G| <= cap, so large
// custom tables are pointless; bound them to keep validation O(n^3) sane.
constexpr std::size_t kMaxGroupOrder = 1024;

std::string at(const std::string& label, const char* what,
               std::initializer_list<std::size_t> where) {
  std::ostringstream os;
  os << "group " << label << ": " << what << " fails at (";
  bool first = true;
  for (std::size_t v : where) {
    if (!first) os << ", ";
    os << v;
    first = false;
  }
  os << ")";
  return os.str();
}

std::vector<elem> cyclic_table(std::size_t n) {
  std::vector<elem> op(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) op[i * n + j] = static_cast<elem>((i + j) % n);
  return op;
}

std::vector<elem> klein_table() {
  std::vector<elem> op(16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) op[i * 4 + j] = static_cast<elem>(i ^ j);
  return op;
}

// Composition table from explicit permutations; op(a,b) = a after b.
std::vector<elem> permutation_table(const std::vector<std::vector<int>>& perms) {
  const std::size_t n = perms.size();
  const std::size_t deg = perms[0].size();
  std::vector<elem> op(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<int> comp(deg);
      for (std::size_t x = 0; x < deg; ++x) comp[x] = perms[a][perms[b][x]];
      bool found = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (perms[k] == comp) {
          op[a * n + b] = static_cast<elem>(k);
          found = true;
          break;
        }
      }
      if (!found) throw GroupAxiomViolation("builtin permutation set is not closed");
    }
  }
  return op;
}

std::vector<elem> s3_table() {
  // id, two 3-cycles, three transpositions.
  std::vector<std::vector<int>> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  return permutation_table(perms);
}

std::vector<elem> d4_table() {
  // Rotations r^k then reflections s·r^k on square corners 0..3.
  std::vector<int> e = {0, 1, 2, 3};
  std::vector<int> r = {1, 2, 3, 0};
  std::vector<int> s = {3, 2, 1, 0};
  auto compose = [](const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(4);
    for (int x = 0; x < 4; ++x) h[x] = f[g[x]];
    return h;
  };
  std::vector<std::vector<int>> perms;
  std::vector<int> rk = e;
  for (int k = 0; k < 4; ++k) {
    perms.push_back(rk);
    rk = compose(r, rk);
  }
  rk = e;
  for (int k = 0; k < 4; ++k) {
    perms.push_back(compose(s, rk));
    rk = compose(r, rk);
  }
  return permutation_table(perms);
}

std::vector<elem> q8_table() {
  // Indices: 1,-1,i,-i,j,-j,k,-k as (axis, sign) with axis 0..3.
  auto idx = [](int axis, int sign) { return elem(2 * axis + (sign < 0 ? 1 : 0)); };
  // axis multiplication: result axis and sign for basis products.
  auto basis = [](int a, int b, int& axis, int& sign) {
    static const int table[4][4][2] = {
        {{0, 1}, {1, 1}, {2, 1}, {3, 1}},     // 1*x
        {{1, 1}, {0, -1}, {3, 1}, {2, -1}},   // i*x: i*1=i, i*i=-1, i*j=k, i*k=-j
        {{2, 1}, {3, -1}, {0, -1}, {1, 1}},   // j*x: j*i=-k, j*j=-1, j*k=i
        {{3, 1}, {2, 1}, {1, -1}, {0, -1}}};  // k*x: k*i=j, k*j=-i, k*k=-1
    axis = table[a][b][0];
    sign = table[a][b][1];
  };
  std::vector<elem> op(64);
  for (int a = 0; a < 4; ++a)
    for (int sa : {1, -1})
      for (int b = 0; b < 4; ++b)
        for (int sb : {1, -1}) {
          int axis, sign;
          basis(a, b, axis, sign);
          op[std::size_t(idx(a, sa)) * 8 + idx(b, sb)] = idx(axis, sa * sb * sign);
        }
  return op;
}

}  // namespace

GroupTable GroupTable::make(std::size_t n, std::vector<elem> op, elem identity,
                            std::string label) {
  if (n == 0 || n > kMaxGroupOrder) throw GroupAxiomViolation("group order out of range");
  if (op.size() != n * n) throw GroupAxiomViolation("group " + label + ": table size mismatch");
  if (identity >= n) throw GroupAxiomViolation("group " + label + ": identity index out of range");
  for (std::size_t i = 0; i < n * n; ++i) {
    if (op[i] >= n) throw GroupAxiomViolation(at(label, "entry range", {i / n, i % n}));
  }
  auto O = [&](std::size_t a, std::size_t b) { return op[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    if (O(identity, a) != a || O(a, identity) != a)
      throw GroupAxiomViolation(at(label, "identity law", {identity, a}));
  }
  std::vector<elem> inv(n, identity);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (O(a, b) == identity && O(b, a) == identity) {
        inv[a] = static_cast<elem>(b);
        found = true;
        break;
      }
    }
    if (!found) throw GroupAxiomViolation(at(label, "inverse existence", {a}));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (O(O(a, b), c) != O(a, O(b, c)))
          throw GroupAxiomViolation(at(label, "associativity", {a, b, c}));
      }

  GroupTable g;
  g.order_ = n;
  g.op_ = std::move(op);
  g.inv_ = std::move(inv);
  g.identity_ = identity;
  g.label_ = std::move(label);
  bool two = true;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = g.element_order(static_cast<elem>(a));
    while (k % 2 == 0) k /= 2;
    if (k != 1) {
      two = false;
      break;
    }
  }
  g.is_2_group_ = two;
  return g;
}

std::size_t GroupTable::element_order(elem a) const {
  std::size_t k = 1;
  elem p = a;
  while (p != identity_) {
    p = op(p, a);
    ++k;
    if (k > order_) throw GroupAxiomViolation("element order exceeds group order");
  }
  return k;
}

std::vector<std::string> builtin_group_names() {
  return {"C1", "C2", "C3", "C4", "C2xC2", "C6", "S3", "D4", "Q8"};
}

GroupPtr builtin_group(const std::string& name) {
  auto make = [&](std::size_t n, std::vector<elem> op) {
    return std::make_shared<const GroupTable>(GroupTable::make(n, std::move(op), 0, name));
  };
  if (name == "C1") return make(1, cyclic_table(1));
  if (name == "C2") return make(2, cyclic_table(2));
  if (name == "C3") return make(3, cyclic_table(3));
  if (name == "C4") return make(4, cyclic_table(4));
  if (name == "C6") return make(6, cyclic_table(6));
  if (name == "C2xC2") return make(4, klein_table());
  if (name == "S3") return make(6, s3_table());
  if (name == "D4") return make(8, d4_table());
  if (name == "Q8") return make(8, q8_table());
  std::ostringstream os;
  os << "unknown group '" << name << "'; builtin groups:";
  for (const auto& g : builtin_group_names()) os << " " << g;
  throw UnknownGroup(os.str());
}

GroupPtr group_from_cayley(std::size_t order, std::vector<elem> op, elem identity,
                           std::string label) {
  return std::make_shared<const GroupTable>(
      GroupTable::make(order, std::move(op), identity, std::move(label)));
}

GroupPtr group_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupAxiomViolation("cannot open Cayley file: " + path);
  std::string text, line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    text += line;
    text += '\n';
  }
  std::istringstream is(text);
  long long m = 0, identity = -1;
  if (!(is >> m >> identity) || m <= 0 || identity < 0 || identity >= m) {
    throw GroupAxiomViolation("Cayley file header must be 'order identity': " + path);
  }
  std::vector<elem> op;
  op.reserve(std::size_t(m) * std::size_t(m));
  long long v;
  while (is >> v) {
    if (v < 0 || v >= m) throw GroupAxiomViolation("Cayley entry out of range in " + path);
    op.push_back(static_cast<elem>(v));
  }
  if (op.size() != std::size_t(m) * std::size_t(m)) {
    throw GroupAxiomViolation("Cayley file has wrong number of entries: " + path);
  }
  return group_from_cayley(std::size_t(m), std::move(op), static_cast<elem>(identity),
                           "@" + path);
}

}  // namespace finring
