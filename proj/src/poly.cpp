#include "simplext/poly.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "text.hpp"

namespace simplext {

namespace {

constexpr std::size_t kMaxParsedDegree = 1u << 20;

void require_same_ring(const DensePolynomial& p, const DensePolynomial& q) {
  if (!(p.ring() == q.ring()))
    throw UsageError("polynomial rings differ: " + p.ring().to_string() + " vs " + q.ring().to_string());
}

bool is_negative_rational(const RingValue& c) {
  const auto* q = std::get_if<Rational>(&c);
  return q != nullptr && sgn(*q) < 0;
}

}  // namespace

DensePolynomial::DensePolynomial(RingDescriptor ring, std::vector<RingValue> coefficients)
    : ring_(std::move(ring)), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) check_member(ring_, c);
  while (!coeffs_.empty() && ring_is_zero(ring_, coeffs_.back())) coeffs_.pop_back();
}

RingValue DensePolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : ring_zero(ring_);
}

MonicModulus::MonicModulus(DensePolynomial f) : f_(std::move(f)) {
  if (f_.degree() < 1) throw UsageError("modulus must have degree at least 1");
  if (!ring_is_one(f_.ring(), f_.coefficients().back()))
    throw UsageError("modulus must be monic (leading coefficient 1)");
}

DensePolynomial poly_add(const DensePolynomial& p, const DensePolynomial& q) {
  require_same_ring(p, q);
  const auto& r = p.ring();
  std::vector<RingValue> out(std::max(p.size(), q.size()), ring_zero(r));
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p.coefficients()[i];
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = ring_add(r, out[i], q.coefficients()[i]);
  return DensePolynomial(r, std::move(out));
}

DensePolynomial poly_neg(const DensePolynomial& p) {
  std::vector<RingValue> out;
  out.reserve(p.size());
  for (const auto& c : p.coefficients()) out.push_back(ring_neg(p.ring(), c));
  return DensePolynomial(p.ring(), std::move(out));
}

DensePolynomial poly_sub(const DensePolynomial& p, const DensePolynomial& q) { return poly_add(p, poly_neg(q)); }

DensePolynomial poly_mul(const DensePolynomial& p, const DensePolynomial& q) {
  require_same_ring(p, q);
  const auto& r = p.ring();
  if (p.is_zero() || q.is_zero()) return DensePolynomial(r);
  std::vector<RingValue> out(p.size() + q.size() - 1, ring_zero(r));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) ring_mul_add(r, out[i + j], p.coefficients()[i], q.coefficients()[j]);
  return DensePolynomial(r, std::move(out));
}

DivMod divmod_monic(const DensePolynomial& p, const MonicModulus& f) {
  require_same_ring(p, f.polynomial());
  const auto& r = p.ring();
  const std::size_t n = f.degree();
  if (p.size() <= n) return {DensePolynomial(r), p};

  std::vector<RingValue> rem(p.coefficients().begin(), p.coefficients().end());
  std::vector<RingValue> quot(p.size() - n, ring_zero(r));
  for (std::size_t i = p.size(); i-- > n;) {
    RingValue lead = rem[i];
    if (ring_is_zero(r, lead)) continue;
    quot[i - n] = lead;
    // rem -= lead * X^(i-n) * f; the X^n term cancels exactly.
    RingValue neg_lead = ring_neg(r, lead);
    for (std::size_t j = 0; j < n; ++j) ring_mul_add(r, rem[i - n + j], neg_lead, f.low_coefficient(j));
    rem[i] = ring_zero(r);
  }
  rem.resize(n);
  return {DensePolynomial(r, std::move(quot)), DensePolynomial(r, std::move(rem))};
}

RingValue poly_eval(const DensePolynomial& p, const RingValue& point, const RingDescriptor& point_ring) {
  const bool same = p.ring() == point_ring;
  const bool embedded = !p.ring().is_matrix() && point_ring.is_matrix() && point_ring.scalar_ring() == p.ring();
  if (!same && !embedded)
    throw UsageError("cannot evaluate a polynomial over " + p.ring().to_string() + " at a point of " +
                     point_ring.to_string());
  check_member(point_ring, point);
  auto inject = [&](const RingValue& c) { return same ? c : embed_scalar(point_ring, c); };

  RingValue acc = ring_zero(point_ring);
  for (std::size_t i = p.size(); i-- > 0;)
    acc = ring_add(point_ring, ring_mul(point_ring, acc, point), inject(p.coefficients()[i]));
  return acc;
}

namespace {

std::size_t read_exponent(detail::Cursor& cur) {
  std::size_t at = (cur.skip_ws(), cur.pos);
  auto d = cur.digits();
  std::size_t k = 0;
  auto [end, ec] = std::from_chars(d.data(), d.data() + d.size(), k);
  if (ec != std::errc() || k > kMaxParsedDegree) throw ParseError("exponent too large", at);
  return k;
}

bool at_variable(detail::Cursor& cur) {
  char c = cur.peek();
  return c == 'x' || c == 'X';
}

/// 'x' ['^' k]
std::size_t read_monomial(detail::Cursor& cur) {
  if (!at_variable(cur)) cur.fail("expected 'x'");
  ++cur.pos;
  if (cur.consume('^')) return read_exponent(cur);
  return 1;
}

DensePolynomial parse_list(detail::Cursor& cur, const RingDescriptor& ring) {
  std::vector<RingValue> coeffs;
  cur.expect('[');
  if (!cur.consume(']')) {
    do {
      coeffs.push_back(detail::read_value(ring, cur, true));
    } while (cur.consume(','));
    cur.expect(']');
  }
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return DensePolynomial(ring, std::move(coeffs));
}

bool looks_like_list(std::string_view text, const RingDescriptor& ring) {
  // A matrix literal opens with "[[", so over a matrix ring a list is "["
  // followed by anything but a single further '['.
  std::string brackets;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    brackets += c;
    if (brackets.size() == 3) break;
  }
  if (brackets.empty() || brackets[0] != '[') return false;
  if (!ring.is_matrix()) return true;
  return brackets.size() < 2 || brackets[1] != '[' || (brackets.size() == 3 && brackets[2] == '[');
}

}  // namespace

DensePolynomial parse_polynomial(std::string_view text, const RingDescriptor& ring) {
  detail::Cursor cur{text};
  if (looks_like_list(text, ring)) return parse_list(cur, ring);

  std::map<std::size_t, RingValue> terms;
  bool first = true;
  while (first || !cur.at_end()) {
    bool negative = false;
    cur.skip_ws();
    if (cur.consume('-')) {
      negative = true;
    } else if (!cur.consume('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    if (cur.at_end()) cur.fail("expected a term");

    RingValue coeff = ring_one(ring);
    std::size_t degree = 0;
    if (at_variable(cur)) {
      degree = read_monomial(cur);
    } else if (detail::starts_value(ring, cur)) {
      coeff = detail::read_value(ring, cur, false);
      if (cur.consume('*')) degree = read_monomial(cur);
    } else {
      cur.fail("expected a coefficient or 'x'");
    }
    if (negative) coeff = ring_neg(ring, coeff);

    auto [it, inserted] = terms.try_emplace(degree, coeff);
    if (!inserted) it->second = ring_add(ring, it->second, coeff);
    first = false;
  }

  std::vector<RingValue> coeffs;
  if (!terms.empty()) coeffs.assign(terms.rbegin()->first + 1, ring_zero(ring));
  for (auto& [d, c] : terms) coeffs[d] = std::move(c);
  return DensePolynomial(ring, std::move(coeffs));
}

std::string format_polynomial(const DensePolynomial& p) {
  if (p.is_zero()) return "0";
  const auto& r = p.ring();
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    const auto& c = p.coefficients()[i];
    if (ring_is_zero(r, c)) continue;
    bool negative = is_negative_rational(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    RingValue magnitude = negative ? ring_neg(r, c) : c;
    std::string monomial = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (ring_is_one(r, magnitude) && !monomial.empty()) {
      out += monomial;
    } else {
      out += format_value(r, magnitude);
      if (!monomial.empty()) out += "*" + monomial;
    }
  }
  return out;
}

std::string format_coefficient_list(const DensePolynomial& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ',';
    out += format_value(p.ring(), p.coefficients()[i]);
  }
  return out + "]";
}

}  // namespace simplext
