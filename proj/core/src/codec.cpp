#include "finring/codec.hpp"

#include <charconv>
#include <sstream>

namespace finring {

namespace {

// Splits on top-level commas, respecting (), [] and {} nesting.
std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::optional<std::string_view> strip_wrapper(std::string_view s, char open, char close) {
  s = trim(s);
  if (s.size() < 2 || s.front() != open || s.back() != close) return std::nullopt;
  return s.substr(1, s.size() - 2);
}

}  // namespace

std::vector<elem> mixed_radix_decode(std::size_t index, std::size_t digits,
                                     std::size_t base) {
  std::vector<elem> out(digits);
  for (std::size_t i = digits; i-- > 0;) {
    out[i] = static_cast<elem>(index % base);
    index /= base;
  }
  return out;
}

std::size_t mixed_radix_encode(const std::vector<elem>& digits, std::size_t base) {
  std::size_t index = 0;
  for (elem d : digits) index = index * base + d;
  return index;
}

std::string ZnCodec::render(elem x) const { return std::to_string(x); }

std::optional<elem> ZnCodec::parse(std::string_view text) const {
  text = trim(text);
  unsigned long v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size() || v >= n_) return std::nullopt;
  return static_cast<elem>(v);
}

TupleCodec::TupleCodec(std::vector<CodecPtr> factors, std::vector<std::size_t> orders)
    : factors_(std::move(factors)), orders_(std::move(orders)) {}

std::vector<elem> TupleCodec::parts(elem x) const {
  std::vector<elem> out(orders_.size());
  std::size_t index = x;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    out[i] = static_cast<elem>(index % orders_[i]);
    index /= orders_[i];
  }
  return out;
}

elem TupleCodec::combine(const std::vector<elem>& parts) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) index = index * orders_[i] + parts[i];
  return static_cast<elem>(index);
}

std::string TupleCodec::render(elem x) const {
  auto p = parts(x);
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += factors_[i]->render(p[i]);
  }
  out += ")";
  return out;
}

std::optional<elem> TupleCodec::parse(std::string_view text) const {
  auto inner = strip_wrapper(text, '(', ')');
  if (!inner) return std::nullopt;
  auto fields = split_top_level(*inner);
  if (fields.size() != orders_.size()) return std::nullopt;
  std::vector<elem> p(fields.size());
  for (std::size_t i = 0; i < fields.size(); ++i) {
    auto v = factors_[i]->parse(fields[i]);
    if (!v) return std::nullopt;
    p[i] = *v;
  }
  return combine(p);
}

MatrixCodec::MatrixCodec(CodecPtr base, std::size_t base_order, std::size_t k)
    : base_(std::move(base)), base_order_(base_order), k_(k) {}

std::vector<elem> MatrixCodec::entries(elem x) const {
  return mixed_radix_decode(x, k_ * k_, base_order_);
}

elem MatrixCodec::combine(const std::vector<elem>& entries) const {
  return static_cast<elem>(mixed_radix_encode(entries, base_order_));
}

std::string MatrixCodec::render(elem x) const {
  auto e = entries(x);
  std::string out = "[";
  for (std::size_t r = 0; r < k_; ++r) {
    if (r) out += ",";
    out += "[";
    for (std::size_t c = 0; c < k_; ++c) {
      if (c) out += ",";
      out += base_->render(e[r * k_ + c]);
    }
    out += "]";
  }
  out += "]";
  return out;
}

std::optional<elem> MatrixCodec::parse(std::string_view text) const {
  auto inner = strip_wrapper(text, '[', ']');
  if (!inner) return std::nullopt;
  auto rows = split_top_level(*inner);
  if (rows.size() != k_) return std::nullopt;
  std::vector<elem> e(k_ * k_);
  for (std::size_t r = 0; r < k_; ++r) {
    auto row = strip_wrapper(rows[r], '[', ']');
    if (!row) return std::nullopt;
    auto cells = split_top_level(*row);
    if (cells.size() != k_) return std::nullopt;
    for (std::size_t c = 0; c < k_; ++c) {
      auto v = base_->parse(cells[c]);
      if (!v) return std::nullopt;
      e[r * k_ + c] = *v;
    }
  }
  return combine(e);
}

TriangularCodec::TriangularCodec(CodecPtr base, std::size_t base_order, std::size_t k)
    : base_(std::move(base)), base_order_(base_order), k_(k) {}

std::vector<elem> TriangularCodec::stored(elem x) const {
  return mixed_radix_decode(x, k_ * (k_ + 1) / 2, base_order_);
}

elem TriangularCodec::combine(const std::vector<elem>& stored) const {
  return static_cast<elem>(mixed_radix_encode(stored, base_order_));
}

std::string TriangularCodec::render(elem x) const {
  auto s = stored(x);
  std::string zero = base_->render(0);
  std::string out = "[";
  std::size_t pos = 0;
  for (std::size_t r = 0; r < k_; ++r) {
    if (r) out += ",";
    out += "[";
    for (std::size_t c = 0; c < k_; ++c) {
      if (c) out += ",";
      out += (r <= c) ? base_->render(s[pos + (c - r)]) : zero;
    }
    out += "]";
    pos += k_ - r;
  }
  out += "]";
  return out;
}

std::optional<elem> TriangularCodec::parse(std::string_view text) const {
  auto inner = strip_wrapper(text, '[', ']');
  if (!inner) return std::nullopt;
  auto rows = split_top_level(*inner);
  if (rows.size() != k_) return std::nullopt;
  std::vector<elem> s;
  s.reserve(k_ * (k_ + 1) / 2);
  for (std::size_t r = 0; r < k_; ++r) {
    auto row = strip_wrapper(rows[r], '[', ']');
    if (!row) return std::nullopt;
    auto cells = split_top_level(*row);
    if (cells.size() != k_) return std::nullopt;
    for (std::size_t c = 0; c < k_; ++c) {
      auto v = base_->parse(cells[c]);
      if (!v) return std::nullopt;
      if (r > c) {
        if (*v != 0) return std::nullopt;  // below the diagonal must be zero
      } else {
        s.push_back(*v);
      }
    }
  }
  return combine(s);
}

QuadCodec::QuadCodec(CodecPtr base, std::size_t base_order, elem multiplier)
    : base_(std::move(base)), base_order_(base_order), multiplier_(multiplier) {}

std::array<elem, 4> QuadCodec::quad(elem x) const {
  auto d = mixed_radix_decode(x, 4, base_order_);
  return {d[0], d[1], d[2], d[3]};
}

elem QuadCodec::combine(const std::array<elem, 4>& q) const {
  return static_cast<elem>(
      mixed_radix_encode({q[0], q[1], q[2], q[3]}, base_order_));
}

std::string QuadCodec::render(elem x) const {
  auto q = quad(x);
  std::string out = "[[";
  out += base_->render(q[0]);
  out += ",";
  out += base_->render(q[1]);
  out += "],[";
  out += base_->render(q[2]);
  out += ",";
  out += base_->render(q[3]);
  out += "]]";
  return out;
}

std::optional<elem> QuadCodec::parse(std::string_view text) const {
  auto inner = strip_wrapper(text, '[', ']');
  if (!inner) return std::nullopt;
  auto rows = split_top_level(*inner);
  if (rows.size() != 2) return std::nullopt;
  std::array<elem, 4> q{};
  for (std::size_t r = 0; r < 2; ++r) {
    auto row = strip_wrapper(rows[r], '[', ']');
    if (!row) return std::nullopt;
    auto cells = split_top_level(*row);
    if (cells.size() != 2) return std::nullopt;
    for (std::size_t c = 0; c < 2; ++c) {
      auto v = base_->parse(cells[c]);
      if (!v) return std::nullopt;
      q[r * 2 + c] = *v;
    }
  }
  return combine(q);
}

GroupRingCodec::GroupRingCodec(CodecPtr base, RingPtr base_ring, GroupPtr group)
    : base_(std::move(base)),
      base_ring_(std::move(base_ring)),
      base_order_(base_ring_->order()),
      group_(std::move(group)) {}

std::vector<elem> GroupRingCodec::coefficients(elem x) const {
  return mixed_radix_decode(x, group_->order(), base_order_);
}

elem GroupRingCodec::combine(const std::vector<elem>& coeffs) const {
  return static_cast<elem>(mixed_radix_encode(coeffs, base_order_));
}

std::string GroupRingCodec::render(elem x) const {
  auto c = coefficients(x);
  std::string out;
  for (std::size_t g = 0; g < c.size(); ++g) {
    if (c[g] == 0) continue;
    if (!out.empty()) out += " + ";
    out += base_->render(c[g]);
    out += "*g";
    out += std::to_string(g);
  }
  if (out.empty()) out = "0";
  return out;
}

std::optional<elem> GroupRingCodec::parse(std::string_view text) const {
  text = trim(text);
  std::vector<elem> coeffs(group_->order(), 0);
  if (text == "0") return combine(coeffs);
  // Terms separated by " + "; the coefficient may itself contain '+'
  // inside brackets, so split only at depth 0.
  std::size_t start = 0;
  int depth = 0;
  std::vector<std::string_view> terms;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    if (ch == ')' || ch == ']' || ch == '}') --depth;
    if (depth == 0 && ch == '+' && i > start && text[i - 1] == ' ') {
      terms.push_back(text.substr(start, i - 1 - start));
      start = i + 2 <= text.size() && text[i + 1] == ' ' ? i + 2 : i + 1;
    }
  }
  terms.push_back(text.substr(start));
  for (auto term : terms) {
    term = trim(term);
    auto pos = term.rfind("*g");
    if (pos == std::string_view::npos) return std::nullopt;
    auto coef_text = term.substr(0, pos);
    auto idx_text = term.substr(pos + 2);
    unsigned long g = 0;
    auto [p, ec] = std::from_chars(idx_text.data(), idx_text.data() + idx_text.size(), g);
    if (ec != std::errc() || p != idx_text.data() + idx_text.size() ||
        g >= group_->order()) {
      return std::nullopt;
    }
    auto v = base_->parse(coef_text);
    if (!v) return std::nullopt;
    coeffs[g] = *v;
  }
  return combine(coeffs);
}

SubsetCodec::SubsetCodec(CodecPtr parent, std::size_t parent_order, Kind kind,
                         std::vector<elem> representative)
    : parent_(std::move(parent)),
      kind_(kind),
      representative_(std::move(representative)),
      back_(parent_order) {
  for (std::size_t i = 0; i < representative_.size(); ++i) {
    back_[representative_[i]] = static_cast<elem>(i);
  }
}

std::string SubsetCodec::render(elem x) const {
  std::string body = parent_->render(representative_[x]);
  if (kind_ == Kind::quotient) return "[" + body + "]";
  return body;
}

std::optional<elem> SubsetCodec::parse(std::string_view text) const {
  std::string_view body = trim(text);
  if (kind_ == Kind::quotient) {
    auto inner = strip_wrapper(body, '[', ']');
    if (!inner) return std::nullopt;
    body = *inner;
  }
  auto parent_elem = parent_->parse(body);
  if (!parent_elem || *parent_elem >= back_.size()) return std::nullopt;
  return back_[*parent_elem];
}

}  // namespace finring
