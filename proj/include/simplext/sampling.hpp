#pragma once

// Seeded generators shared by the property suite, the benchmark and tests.

#include "simplext/extension.hpp"

namespace simplext {

/// A value that commutes with every element of `ring`: any value in a scalar
/// ring, a scalar multiple of the identity in a matrix ring.
RingValue random_central_value(const RingDescriptor& ring, SeedStream& seeds);

/// Monic of degree n with central random low coefficients.
MonicModulus random_monic(const RingDescriptor& ring, std::size_t n, SeedStream& seeds);

/// A polynomial with `length` random coefficients (degree < length).
DensePolynomial random_polynomial(const RingDescriptor& ring, std::size_t length, SeedStream& seeds);

/// Uniformly random coordinates.
ExtElement random_element(const ExtensionContext& ctx, SeedStream& seeds);

}  // namespace simplext
