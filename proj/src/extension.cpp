#include "simplext/extension.hpp"

#include <atomic>

namespace simplext {

namespace {

std::uint64_t next_context_id() {
  static std::atomic<std::uint64_t> counter{0};
  return ++counter;
}

Vector padded(const DensePolynomial& p, std::size_t n) {
  Vector out(p.coefficients().begin(), p.coefficients().end());
  out.resize(n, ring_zero(p.ring()));
  return out;
}

// w += s * v, with s on the left of each entry.
void add_scaled(const RingDescriptor& r, Vector& w, const RingValue& s, std::span<const RingValue> v) {
  for (std::size_t i = 0; i < w.size(); ++i) ring_mul_add(r, w[i], s, v[i]);
}

}  // namespace

ExtensionContext::ExtensionContext(MonicModulus f, CompanionMatrix c, StructureMatrix s, std::uint64_t id)
    : modulus_(std::move(f)), companion_(std::move(c)), structure_(std::move(s)), id_(id) {}

ExtElement ExtensionContext::element(Vector coords) const {
  if (coords.size() != degree())
    throw UsageError("element needs exactly " + std::to_string(degree()) + " coordinates");
  for (const auto& c : coords) check_member(ring(), c);
  return ExtElement(id_, std::move(coords));
}

void ExtensionContext::check_owns(const ExtElement& a) const {
  if (a.context_id() != id_) throw UsageError("element belongs to a different extension context");
}

ExtensionContext make_context(const RingDescriptor& ring, const DensePolynomial& f) {
  if (!(f.ring() == ring)) throw UsageError("modulus is not over ring " + ring.to_string());
  MonicModulus modulus(f);
  CompanionMatrix c = companion_of(modulus);
  StructureMatrix s = structure_matrix(c);
  return ExtensionContext(std::move(modulus), std::move(c), std::move(s), next_context_id());
}

ExtElement element_from_poly(const ExtensionContext& ctx, const DensePolynomial& g) {
  return ctx.element(padded(divmod_monic(g, ctx.modulus()).remainder, ctx.degree()));
}

DensePolynomial element_to_poly(const ExtensionContext& ctx, const ExtElement& a) {
  ctx.check_owns(a);
  return DensePolynomial(ctx.ring(), Vector(a.coords().begin(), a.coords().end()));
}

ExtElement mul_naive(const ExtensionContext& ctx, const ExtElement& a, const ExtElement& b) {
  return element_from_poly(ctx, poly_mul(element_to_poly(ctx, a), element_to_poly(ctx, b)));
}

ExtElement mul_kronecker(const ExtensionContext& ctx, const ExtElement& a, const ExtElement& b) {
  ctx.check_owns(a);
  ctx.check_owns(b);
  return ctx.element(mat_vec(ctx.structure().matrix(), kronecker_left(ctx.ring(), a.coords(), b.coords())));
}

ExtElement mul_regular(const ExtensionContext& ctx, const ExtElement& a, const ExtElement& b) {
  ctx.check_owns(a);
  ctx.check_owns(b);
  const auto& r = ctx.ring();
  const std::size_t n = ctx.degree();
  Vector w(n, ring_zero(r));
  add_scaled(r, w, a.coords()[n - 1], b.coords());
  for (std::size_t i = n - 1; i-- > 0;) {
    w = companion_matvec(ctx.companion(), w);
    add_scaled(r, w, a.coords()[i], b.coords());
  }
  return ctx.element(std::move(w));
}

Strategy parse_strategy(std::string_view name) {
  for (auto s : kAllStrategies)
    if (strategy_name(s) == name) return s;
  throw UsageError("unknown strategy '" + std::string(name) + "' (expected naive, kronecker or regular)");
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::naive:
      return "naive";
    case Strategy::kronecker:
      return "kronecker";
    case Strategy::regular:
      return "regular";
  }
  return "?";
}

ExtElement multiply(const ExtensionContext& ctx, const ExtElement& a, const ExtElement& b, Strategy strategy) {
  switch (strategy) {
    case Strategy::naive:
      return mul_naive(ctx, a, b);
    case Strategy::kronecker:
      return mul_kronecker(ctx, a, b);
    case Strategy::regular:
      break;
  }
  return mul_regular(ctx, a, b);
}

ExtElement add(const ExtensionContext& ctx, const ExtElement& a, const ExtElement& b) {
  ctx.check_owns(a);
  ctx.check_owns(b);
  Vector out;
  out.reserve(ctx.degree());
  for (std::size_t i = 0; i < ctx.degree(); ++i) out.push_back(ring_add(ctx.ring(), a.coords()[i], b.coords()[i]));
  return ctx.element(std::move(out));
}

ExtElement neg(const ExtensionContext& ctx, const ExtElement& a) {
  ctx.check_owns(a);
  Vector out;
  out.reserve(ctx.degree());
  for (const auto& c : a.coords()) out.push_back(ring_neg(ctx.ring(), c));
  return ctx.element(std::move(out));
}

DenseMatrix regular_representation(const ExtensionContext& ctx, const ExtElement& a) {
  ctx.check_owns(a);
  const std::size_t n = ctx.degree();
  DenseMatrix out(ctx.ring(), n, n);
  Vector col(a.coords().begin(), a.coords().end());
  for (std::size_t j = 0; j < n; ++j) {
    if (j > 0) col = companion_matvec(ctx.companion(), col);
    out.set_column(j, col);
  }
  return out;
}

ExtElement power_coordinates(const ExtensionContext& ctx, std::uint64_t k) {
  Vector v(ctx.degree(), ring_zero(ctx.ring()));
  v[0] = ring_one(ctx.ring());
  for (std::uint64_t i = 0; i < k; ++i) v = companion_matvec(ctx.companion(), v);
  return ctx.element(std::move(v));
}

DensePolynomial odot(const MonicModulus& f, const DensePolynomial& g, const DensePolynomial& h) {
  const std::size_t n = f.degree();
  if (!(g.ring() == f.ring()) || !(h.ring() == f.ring())) throw UsageError("odot: ring mismatch");
  if (g.degree() >= static_cast<long>(n) || h.degree() >= static_cast<long>(n))
    throw UsageError("odot: operands must have degree below " + std::to_string(n));
  const auto m = structure_matrix(f);
  return DensePolynomial(f.ring(), mat_vec(m.matrix(), kronecker_left(f.ring(), padded(g, n), padded(h, n))));
}

bool theorem2_check(const MonicModulus& f, const RingDescriptor& xi_ring, const RingValue& xi,
                    const DensePolynomial& g, const DensePolynomial& h) {
  if (!ring_is_zero(xi_ring, poly_eval(f.polynomial(), xi, xi_ring)))
    throw PreconditionError("theorem2_check: f(xi) is not zero");
  const RingValue lhs = ring_mul(xi_ring, poly_eval(g, xi, xi_ring), poly_eval(h, xi, xi_ring));
  const RingValue rhs = poly_eval(odot(f, g, h), xi, xi_ring);
  return ring_eq(xi_ring, lhs, rhs);
}

RingValue as_matrix_value(const DenseMatrix& m, const RingDescriptor& matrix_ring) {
  const auto* mr = std::get_if<MatrixRing>(&matrix_ring.kind());
  if (mr == nullptr || mr->k != m.rows() || m.rows() != m.cols() || !(matrix_ring.scalar_ring() == m.ring()))
    throw UsageError("as_matrix_value: shape or ring mismatch");
  MatrixValue out{mr->k, {}};
  out.entries.reserve(m.entries().size());
  for (const auto& e : m.entries()) {
    if (const auto* q = std::get_if<Rational>(&e))
      out.entries.emplace_back(*q);
    else
      out.entries.emplace_back(std::get<Residue>(e));
  }
  return out;
}

}  // namespace simplext
