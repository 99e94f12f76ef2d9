#include "simplext/sampling.hpp"

namespace simplext {

RingValue random_central_value(const RingDescriptor& ring, SeedStream& seeds) {
  if (!ring.is_matrix()) return random_value(ring, seeds);
  return embed_scalar(ring, random_value(ring.scalar_ring(), seeds));
}

MonicModulus random_monic(const RingDescriptor& ring, std::size_t n, SeedStream& seeds) {
  Vector coeffs;
  coeffs.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) coeffs.push_back(random_central_value(ring, seeds));
  coeffs.push_back(ring_one(ring));
  return MonicModulus(DensePolynomial(ring, std::move(coeffs)));
}

DensePolynomial random_polynomial(const RingDescriptor& ring, std::size_t length, SeedStream& seeds) {
  Vector coeffs;
  coeffs.reserve(length);
  for (std::size_t i = 0; i < length; ++i) coeffs.push_back(random_value(ring, seeds));
  return DensePolynomial(ring, std::move(coeffs));
}

ExtElement random_element(const ExtensionContext& ctx, SeedStream& seeds) {
  Vector coords;
  coords.reserve(ctx.degree());
  for (std::size_t i = 0; i < ctx.degree(); ++i) coords.push_back(random_value(ctx.ring(), seeds));
  return ctx.element(std::move(coords));
}

}  // namespace simplext
