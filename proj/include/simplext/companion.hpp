#pragma once

// Dense matrices, companion matrices of monic polynomials, the structure
// matrix (I C ... C^{n-1}) and the left Kronecker product it is applied to.

#include <span>
#include <vector>

#include "simplext/poly.hpp"
#include "simplext/ring.hpp"

namespace simplext {

using Vector = std::vector<RingValue>;

class DenseMatrix {
public:
  /// rows x cols zero matrix.
  DenseMatrix(RingDescriptor ring, std::size_t rows, std::size_t cols);
  /// Row-major entries; throws UsageError on a count mismatch or foreign entry.
  DenseMatrix(RingDescriptor ring, std::size_t rows, std::size_t cols, std::vector<RingValue> entries);

  static DenseMatrix identity(const RingDescriptor& ring, std::size_t n);

  const RingDescriptor& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const RingValue> entries() const noexcept { return entries_; }

  const RingValue& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  /// Unchecked write; callers keep entries inside ring().
  RingValue& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const RingValue> values);

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
  RingDescriptor ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RingValue> entries_;
};

/// Products take entries left to right: (AB)_ij = sum_l A_il B_lj.
DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
Vector mat_vec(const DenseMatrix& a, std::span<const RingValue> v);
DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b);

/// The companion of f = X^n + a_{n-1}X^{n-1} + ... + a_0: ones on the
/// subdiagonal, -a_0 ... -a_{n-1} down the last column.
class CompanionMatrix {
public:
  const MonicModulus& modulus() const noexcept { return modulus_; }
  const DenseMatrix& matrix() const noexcept { return matrix_; }
  std::size_t degree() const noexcept { return modulus_.degree(); }
  /// Entry (i, n-1), i.e. -a_i.
  const RingValue& last_column(std::size_t i) const { return matrix_.at(i, degree() - 1); }

private:
  friend CompanionMatrix companion_of(const MonicModulus& f);
  CompanionMatrix(MonicModulus f, DenseMatrix m) : modulus_(std::move(f)), matrix_(std::move(m)) {}

  MonicModulus modulus_;
  DenseMatrix matrix_;
};

CompanionMatrix companion_of(const MonicModulus& f);

/// C * v in O(n): out_0 = c_0 v_{n-1}, out_i = v_{i-1} + c_i v_{n-1}, where
/// c is the last column of C.
Vector companion_matvec(const CompanionMatrix& c, std::span<const RingValue> v);

/// The n x n^2 matrix (I C C^2 ... C^{n-1}).
class StructureMatrix {
public:
  const MonicModulus& modulus() const noexcept { return modulus_; }
  const DenseMatrix& matrix() const noexcept { return matrix_; }
  std::size_t degree() const noexcept { return modulus_.degree(); }
  /// Block j (0-based), equal to C^j.
  DenseMatrix block(std::size_t j) const;

private:
  friend StructureMatrix structure_matrix(const CompanionMatrix& c);
  StructureMatrix(MonicModulus f, DenseMatrix m) : modulus_(std::move(f)), matrix_(std::move(m)) {}

  MonicModulus modulus_;
  DenseMatrix matrix_;
};

/// Built column by column with companion_matvec, O(n^3) ring operations.
StructureMatrix structure_matrix(const CompanionMatrix& c);
StructureMatrix structure_matrix(const MonicModulus& f);

/// Left Kronecker product: entry j*n + i is x_i * y_j (0-based), so block j
/// is x scaled by y_j. This equals the conventional y (x) x.
Vector kronecker_left(const RingDescriptor& ring, std::span<const RingValue> x, std::span<const RingValue> y);

/// n x n circulant with first column [g] padded to n; entry (r, c) is
/// g_{(r - c) mod n}. Throws UsageError if deg g >= n.
DenseMatrix circulant_of(const DensePolynomial& g, std::size_t n);

}  // namespace simplext
