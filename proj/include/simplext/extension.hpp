#pragma once

// The quotient R[X]/(f) with elements held as coordinate vectors relative to
// 1, xi, ..., xi^{n-1}.
//
// Three multiplication strategies are provided and must agree exactly:
//
//   naive      multiply the lifted polynomials, reduce mod f (the oracle)
//   kronecker  (I C ... C^{n-1}) applied to the left Kronecker product
//   regular    a(C) [b] by Horner with O(n) companion products
//
// f is not required to be the minimal polynomial of anything; coordinates
// are those of the canonical representative of degree < n. Over a
// noncommutative ring the coefficients of f must be central.

#include <cstdint>
#include <string_view>

#include "simplext/companion.hpp"
#include "simplext/poly.hpp"

namespace simplext {

class ExtElement {
public:
  std::uint64_t context_id() const noexcept { return context_id_; }
  std::span<const RingValue> coords() const noexcept { return coords_; }

  friend bool operator==(const ExtElement&, const ExtElement&) = default;

private:
  friend class ExtensionContext;
  ExtElement(std::uint64_t id, Vector coords) : context_id_(id), coords_(std::move(coords)) {}

  std::uint64_t context_id_;
  Vector coords_;
};

class ExtensionContext {
public:
  const RingDescriptor& ring() const noexcept { return modulus_.ring(); }
  const MonicModulus& modulus() const noexcept { return modulus_; }
  const CompanionMatrix& companion() const noexcept { return companion_; }
  const StructureMatrix& structure() const noexcept { return structure_; }
  std::size_t degree() const noexcept { return modulus_.degree(); }
  std::uint64_t id() const noexcept { return id_; }

  /// Wraps an already reduced coordinate vector of length n.
  ExtElement element(Vector coords) const;
  /// Throws UsageError unless `a` was made by this context.
  void check_owns(const ExtElement& a) const;

private:
  friend ExtensionContext make_context(const RingDescriptor& ring, const DensePolynomial& f);
  ExtensionContext(MonicModulus f, CompanionMatrix c, StructureMatrix s, std::uint64_t id);

  MonicModulus modulus_;
  CompanionMatrix companion_;
  StructureMatrix structure_;
  std::uint64_t id_;
};

/// Precomputes C and (I C ... C^{n-1}). Throws UsageError if f is not monic
/// of degree >= 1 over `ring`.
ExtensionContext make_context(const RingDescriptor& ring, const DensePolynomial& f);

/// Coordinates of g mod f.
ExtElement element_from_poly(const ExtensionContext& ctx, const DensePolynomial& g);
/// Reads the coordinates back as a polynomial of degree < n.
DensePolynomial element_to_poly(const ExtensionContext& ctx, const ExtElement& a);

ExtElement mul_naive(const ExtensionContext& ctx, const ExtElement& a, const ExtElement& b);
ExtElement mul_kronecker(const ExtensionContext& ctx, const ExtElement& a, const ExtElement& b);
ExtElement mul_regular(const ExtensionContext& ctx, const ExtElement& a, const ExtElement& b);

enum class Strategy { naive, kronecker, regular };

/// Throws UsageError on an unknown name.
Strategy parse_strategy(std::string_view name);
std::string_view strategy_name(Strategy s);
inline constexpr Strategy kAllStrategies[] = {Strategy::naive, Strategy::kronecker, Strategy::regular};

ExtElement multiply(const ExtensionContext& ctx, const ExtElement& a, const ExtElement& b,
                    Strategy strategy = Strategy::regular);

ExtElement add(const ExtensionContext& ctx, const ExtElement& a, const ExtElement& b);
ExtElement neg(const ExtensionContext& ctx, const ExtElement& a);

/// Matrix of multiplication by a: column j is C^j [a].
DenseMatrix regular_representation(const ExtensionContext& ctx, const ExtElement& a);

/// [xi^k], by k companion products starting from e_1.
ExtElement power_coordinates(const ExtensionContext& ctx, std::uint64_t k);

/// The product of g and h in R_n[X] defined by (I C ... C^{n-1})([g] (x) [h]).
/// Both inputs must already have degree < n; nothing is reduced here.
DensePolynomial odot(const MonicModulus& f, const DensePolynomial& g, const DensePolynomial& h);

/// Raised by theorem2_check when f(xi) != 0.
class PreconditionError : public UsageError {
public:
  using UsageError::UsageError;
};

/// Checks g(xi) h(xi) == (g odot h)(xi) for a square matrix xi over the
/// scalar ring of f with f(xi) = 0. Throws PreconditionError otherwise.
bool theorem2_check(const MonicModulus& f, const RingDescriptor& xi_ring, const RingValue& xi,
                    const DensePolynomial& g, const DensePolynomial& h);

/// Packs a dense n x n scalar matrix as an element of matrix(n, ring).
RingValue as_matrix_value(const DenseMatrix& m, const RingDescriptor& matrix_ring);

}  // namespace simplext
