#pragma once

// Coefficient rings for simple integral extensions.
//
// A ring is chosen at run time through a RingDescriptor and its elements are
// RingValues. Three families are provided:
//
//   rational        exact fractions backed by GMP, always in lowest terms
//   modular(m)      residues in [0, m), any m >= 2 (composite m allowed)
//   matrix(k, S)    k x k matrices over a commutative scalar ring S
//
// Matrices nest one level only, so a matrix entry is always a ScalarValue.
// All operations are pure and every returned value is canonical, so equality
// is structural.

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace simplext {

/// Wrong ring, wrong shape, or an argument outside an operation's domain.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input. `offset` is the 0-based position of the problem.
class ParseError : public UsageError {
public:
  ParseError(const std::string& what, std::size_t offset)
      : UsageError(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

struct RationalRing {
  friend bool operator==(const RationalRing&, const RationalRing&) = default;
};

struct ModularRing {
  std::uint64_t modulus;
  friend bool operator==(const ModularRing&, const ModularRing&) = default;
};

using ScalarRing = std::variant<RationalRing, ModularRing>;

struct MatrixRing {
  std::size_t k;
  ScalarRing base;
  friend bool operator==(const MatrixRing&, const MatrixRing&) = default;
};

class RingDescriptor {
public:
  using Kind = std::variant<RationalRing, ModularRing, MatrixRing>;

  static RingDescriptor rational();
  /// Throws UsageError when m < 2.
  static RingDescriptor modular(std::uint64_t m);
  /// Throws UsageError when k < 1 or `base` is itself a matrix ring.
  static RingDescriptor matrix(std::size_t k, const RingDescriptor& base);

  const Kind& kind() const noexcept { return kind_; }
  bool is_matrix() const noexcept { return std::holds_alternative<MatrixRing>(kind_); }
  bool is_commutative() const noexcept;

  /// Scalar ring of a matrix ring; the ring itself otherwise.
  RingDescriptor scalar_ring() const;

  /// The selection string accepted by parse_ring, e.g. "mat:2:mod:5".
  std::string to_string() const;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

private:
  explicit RingDescriptor(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

/// Parses `rational`, `mod:<m>` or `mat:<k>:<base>`.
RingDescriptor parse_ring(std::string_view selection);

using Rational = mpq_class;

struct Residue {
  std::uint64_t value;
  friend bool operator==(const Residue&, const Residue&) = default;
};

using ScalarValue = std::variant<Rational, Residue>;

/// Row-major k x k matrix over a scalar ring.
struct MatrixValue {
  std::size_t k = 0;
  std::vector<ScalarValue> entries;

  const ScalarValue& at(std::size_t row, std::size_t col) const { return entries[row * k + col]; }
  friend bool operator==(const MatrixValue&, const MatrixValue&) = default;
};

using RingValue = std::variant<Rational, Residue, MatrixValue>;

/// Throws UsageError unless `x` is a canonical element of `r`.
void check_member(const RingDescriptor& r, const RingValue& x);

RingValue ring_zero(const RingDescriptor& r);
RingValue ring_one(const RingDescriptor& r);

RingValue ring_add(const RingDescriptor& r, const RingValue& x, const RingValue& y);
RingValue ring_sub(const RingDescriptor& r, const RingValue& x, const RingValue& y);
RingValue ring_neg(const RingDescriptor& r, const RingValue& x);
/// x * y with x on the left.
RingValue ring_mul(const RingDescriptor& r, const RingValue& x, const RingValue& y);
/// acc += x * y, in place.
void ring_mul_add(const RingDescriptor& r, RingValue& acc, const RingValue& x, const RingValue& y);

bool ring_eq(const RingDescriptor& r, const RingValue& x, const RingValue& y);
bool ring_is_zero(const RingDescriptor& r, const RingValue& x);
bool ring_is_one(const RingDescriptor& r, const RingValue& x);

/// Brings an arbitrary payload of the right shape into canonical form:
/// fractions reduced, residues taken mod m. Idempotent.
RingValue canonicalize(const RingDescriptor& r, RingValue x);

/// Image of an integer under Z -> R.
RingValue ring_from_integer(const RingDescriptor& r, long long n);

/// Embeds a scalar as scalar * identity of the matrix ring `r`.
RingValue embed_scalar(const RingDescriptor& r, const RingValue& scalar);

/// Deterministic source of random ring elements.
class SeedStream {
public:
  explicit SeedStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  long long uniform_signed(long long lo, long long hi);

private:
  std::mt19937_64 engine_;
};

/// Rational: numerator in [-9, 9], denominator in [1, 9]. Modular: uniform
/// residue. Matrix: entrywise.
RingValue random_value(const RingDescriptor& r, SeedStream& seeds);

/// Rational `p/q` or `p`; modular any decimal integer (reduced mod m);
/// matrix `[[a,b];[c,d]]`, or a bare scalar literal s meaning s * identity.
RingValue parse_value(const RingDescriptor& r, std::string_view text);
std::string format_value(const RingDescriptor& r, const RingValue& x);

}  // namespace simplext
