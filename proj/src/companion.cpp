#include "simplext/companion.hpp"

namespace simplext {

namespace {

void require_length(std::span<const RingValue> v, std::size_t n, const char* what) {
  if (v.size() != n)
    throw UsageError(std::string(what) + ": expected length " + std::to_string(n) + ", got " +
                     std::to_string(v.size()));
}

}  // namespace

DenseMatrix::DenseMatrix(RingDescriptor ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, ring_zero(ring_)) {}

DenseMatrix::DenseMatrix(RingDescriptor ring, std::size_t rows, std::size_t cols, std::vector<RingValue> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw UsageError("matrix entry count does not match its shape");
  for (const auto& e : entries_) check_member(ring_, e);
}

DenseMatrix DenseMatrix::identity(const RingDescriptor& ring, std::size_t n) {
  DenseMatrix out(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = ring_one(ring);
  return out;
}

Vector DenseMatrix::column(std::size_t c) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

void DenseMatrix::set_column(std::size_t c, std::span<const RingValue> values) {
  require_length(values, rows_, "set_column");
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = values[r];
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
  if (!(a.ring() == b.ring())) throw UsageError("mat_mul: ring mismatch");
  if (a.cols() != b.rows()) throw UsageError("mat_mul: shape mismatch");
  const auto& r = a.ring();
  DenseMatrix out(r, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const auto& left = a.at(i, l);
      if (ring_is_zero(r, left)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) ring_mul_add(r, out.at(i, j), left, b.at(l, j));
    }
  return out;
}

Vector mat_vec(const DenseMatrix& a, std::span<const RingValue> v) {
  require_length(v, a.cols(), "mat_vec");
  const auto& r = a.ring();
  Vector out(a.rows(), ring_zero(r));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) ring_mul_add(r, out[i], a.at(i, j), v[j]);
  return out;
}

DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b) {
  if (!(a.ring() == b.ring())) throw UsageError("mat_add: ring mismatch");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw UsageError("mat_add: shape mismatch");
  DenseMatrix out(a.ring(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = ring_add(a.ring(), a.at(i, j), b.at(i, j));
  return out;
}

CompanionMatrix companion_of(const MonicModulus& f) {
  const auto& r = f.ring();
  const std::size_t n = f.degree();
  DenseMatrix m(r, n, n);
  for (std::size_t i = 1; i < n; ++i) m.at(i, i - 1) = ring_one(r);
  for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1) = ring_neg(r, f.low_coefficient(i));
#ifdef SIMPLEXT_FAULT_COMPANION_SIGN
  m.at(0, n - 1) = f.low_coefficient(0);
#endif
  return CompanionMatrix(f, std::move(m));
}

Vector companion_matvec(const CompanionMatrix& c, std::span<const RingValue> v) {
  const std::size_t n = c.degree();
  require_length(v, n, "companion_matvec");
  const auto& r = c.matrix().ring();
  Vector out;
  out.reserve(n);
  out.push_back(ring_mul(r, c.last_column(0), v[n - 1]));
  for (std::size_t i = 1; i < n; ++i) {
    RingValue e = v[i - 1];
    ring_mul_add(r, e, c.last_column(i), v[n - 1]);
    out.push_back(std::move(e));
  }
  return out;
}

DenseMatrix StructureMatrix::block(std::size_t j) const {
  const std::size_t n = degree();
  if (j >= n) throw UsageError("structure matrix block index out of range");
  DenseMatrix out(matrix_.ring(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col) out.at(r, col) = matrix_.at(r, j * n + col);
  return out;
}

StructureMatrix structure_matrix(const CompanionMatrix& c) {
  const auto& r = c.matrix().ring();
  const std::size_t n = c.degree();
  DenseMatrix m(r, n, n * n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring_one(r);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t col = 0; col < n; ++col)
      m.set_column(j * n + col, companion_matvec(c, m.column((j - 1) * n + col)));
  return StructureMatrix(c.modulus(), std::move(m));
}

StructureMatrix structure_matrix(const MonicModulus& f) { return structure_matrix(companion_of(f)); }

Vector kronecker_left(const RingDescriptor& ring, std::span<const RingValue> x, std::span<const RingValue> y) {
  require_length(y, x.size(), "kronecker_left");
  const std::size_t n = x.size();
  Vector out;
  out.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) out.push_back(ring_mul(ring, x[i], y[j]));
  return out;
}

DenseMatrix circulant_of(const DensePolynomial& g, std::size_t n) {
  if (n == 0) throw UsageError("circulant_of: n must be at least 1");
  if (g.degree() >= static_cast<long>(n)) throw UsageError("circulant_of: degree of g must be below n");
  DenseMatrix out(g.ring(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = g.coefficient((r + n - c) % n);
  return out;
}

}  // namespace simplext
