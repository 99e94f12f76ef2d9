#pragma once

// Dense univariate polynomials over a RingDescriptor, coefficients stored in
// ascending degree: index i holds the coefficient of X^i.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simplext/ring.hpp"

namespace simplext {

class DensePolynomial {
public:
  /// Validates membership and strips trailing zeros. The zero polynomial has
  /// no coefficients.
  DensePolynomial(RingDescriptor ring, std::vector<RingValue> coefficients);
  explicit DensePolynomial(RingDescriptor ring) : ring_(std::move(ring)) {}

  const RingDescriptor& ring() const noexcept { return ring_; }
  std::span<const RingValue> coefficients() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  /// Coefficient of X^i; ring zero past the end.
  RingValue coefficient(std::size_t i) const;

  friend bool operator==(const DensePolynomial&, const DensePolynomial&) = default;

private:
  RingDescriptor ring_;
  std::vector<RingValue> coeffs_;
};

/// A monic polynomial of degree n >= 1: X^n + a_{n-1} X^{n-1} + ... + a_0.
///
/// Over a noncommutative ring the a_i must be central. That is a caller
/// precondition and is not checked.
class MonicModulus {
public:
  /// Throws UsageError if `f` has degree < 1 or a leading coefficient other
  /// than ring one.
  explicit MonicModulus(DensePolynomial f);

  const DensePolynomial& polynomial() const noexcept { return f_; }
  const RingDescriptor& ring() const noexcept { return f_.ring(); }
  std::size_t degree() const noexcept { return f_.size() - 1; }
  /// a_i for 0 <= i < n.
  const RingValue& low_coefficient(std::size_t i) const { return f_.coefficients()[i]; }

  friend bool operator==(const MonicModulus&, const MonicModulus&) = default;

private:
  DensePolynomial f_;
};

DensePolynomial poly_add(const DensePolynomial& p, const DensePolynomial& q);
DensePolynomial poly_neg(const DensePolynomial& p);
DensePolynomial poly_sub(const DensePolynomial& p, const DensePolynomial& q);
/// Schoolbook product; each term is p_i * q_j with p on the left.
DensePolynomial poly_mul(const DensePolynomial& p, const DensePolynomial& q);

struct DivMod {
  DensePolynomial quotient;
  DensePolynomial remainder;
};

/// p = quotient * f + remainder with deg remainder < deg f.
DivMod divmod_monic(const DensePolynomial& p, const MonicModulus& f);

/// Horner evaluation. `point_ring` is either p.ring() or matrix(k, p.ring()),
/// in which case coefficients enter as scalar * identity.
RingValue poly_eval(const DensePolynomial& p, const RingValue& point, const RingDescriptor& point_ring);

/// Parses either a signed sum of terms (`c`, `x^k`, `c*x^k`, `x`) or a
/// coefficient list `[c0,c1,...]`. Like terms are summed.
DensePolynomial parse_polynomial(std::string_view text, const RingDescriptor& ring);

/// Expression form, e.g. "x^3 - 1"; parse_polynomial reads it back exactly.
std::string format_polynomial(const DensePolynomial& p);
/// List form, e.g. "[-1,0,0,1]".
std::string format_coefficient_list(const DensePolynomial& p);

}  // namespace simplext
