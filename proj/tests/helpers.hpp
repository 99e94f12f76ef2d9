#pragma once

#include <string>
#include <vector>

#include "simplext/extension.hpp"

namespace testing {

using namespace simplext;

inline RingDescriptor Q() { return RingDescriptor::rational(); }
inline RingDescriptor Zm(std::uint64_t m) { return RingDescriptor::modular(m); }

inline RingValue q(long num, long den = 1) {
  Rational v(num, den);
  v.canonicalize();
  return v;
}
inline RingValue res(std::uint64_t v) { return Residue{v}; }

inline Vector qs(std::initializer_list<long> values) {
  Vector out;
  for (long v : values) out.push_back(q(v));
  return out;
}
inline Vector residues(std::initializer_list<std::uint64_t> values) {
  Vector out;
  for (auto v : values) out.push_back(res(v));
  return out;
}

inline DensePolynomial poly(const RingDescriptor& r, std::string_view text) { return parse_polynomial(text, r); }
inline MonicModulus monic(const RingDescriptor& r, std::string_view text) { return MonicModulus(poly(r, text)); }

inline Vector to_vector(std::span<const RingValue> s) { return Vector(s.begin(), s.end()); }

}  // namespace testing
