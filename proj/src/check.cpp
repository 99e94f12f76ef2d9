#include "simplext/check.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "simplext/sampling.hpp"

namespace simplext {

namespace {

struct Failure {
  long degree;
  std::string what;
};

using Outcome = std::optional<Failure>;
using Body = std::function<Outcome(SeedStream&, std::size_t&)>;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string coords_text(const RingDescriptor& r, std::span<const RingValue> v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += format_value(r, v[i]);
  }
  return out + "]";
}

class Harness {
public:
  explicit Harness(const CheckOptions& options) : options_(options) {}

  void run(const std::string& property, const RingDescriptor& ring, const Body& body) {
    SeedStream seeds(options_.seed ^ fnv1a(property + "/" + ring.to_string()));
    PropertyResult result;
    result.property = property;
    result.ring = ring.to_string();
    Outcome failure;
    try {
      failure = body(seeds, result.cases);
    } catch (const std::exception& e) {
      failure = Failure{-1, std::string("exception: ") + e.what()};
    }
    if (failure) {
      result.passed = false;
      result.degree = failure->degree;
      result.counterexample = failure->what;
    }
    report_.results.push_back(std::move(result));
  }

  const CheckOptions& options() const { return options_; }
  CheckReport take() { return std::move(report_); }

private:
  CheckOptions options_;
  CheckReport report_;
};

const std::vector<RingDescriptor>& scalar_rings() {
  static const std::vector<RingDescriptor> rings = {RingDescriptor::rational(), RingDescriptor::modular(2),
                                                    RingDescriptor::modular(7), RingDescriptor::modular(256)};
  return rings;
}

RingDescriptor noncommutative_ring() { return RingDescriptor::matrix(2, RingDescriptor::modular(5)); }

std::vector<RingDescriptor> all_rings() {
  auto rings = scalar_rings();
  rings.push_back(noncommutative_ring());
  return rings;
}

// Cycles through 1..max_degree so count-based loops cover every degree.
std::size_t cycle_degree(std::size_t i, std::size_t max_degree) { return 1 + i % max_degree; }

// ---- ring-core -----------------------------------------------------------

Outcome ring_axioms(const RingDescriptor& r, SeedStream& seeds, std::size_t& cases) {
  const auto zero = ring_zero(r);
  const auto one = ring_one(r);
  for (int t = 0; t < 1000; ++t, ++cases) {
    auto x = random_value(r, seeds), y = random_value(r, seeds), z = random_value(r, seeds);
    auto fail = [&](const char* law) {
      return Failure{-1, std::string(law) + " x=" + format_value(r, x) + " y=" + format_value(r, y) +
                             " z=" + format_value(r, z)};
    };
    if (!ring_eq(r, ring_add(r, ring_add(r, x, y), z), ring_add(r, x, ring_add(r, y, z)))) return fail("add-assoc");
    if (!ring_eq(r, ring_add(r, x, y), ring_add(r, y, x))) return fail("add-comm");
    if (!ring_eq(r, ring_mul(r, ring_mul(r, x, y), z), ring_mul(r, x, ring_mul(r, y, z)))) return fail("mul-assoc");
    if (!ring_eq(r, ring_mul(r, x, ring_add(r, y, z)), ring_add(r, ring_mul(r, x, y), ring_mul(r, x, z))))
      return fail("left-distributive");
    if (!ring_eq(r, ring_mul(r, ring_add(r, x, y), z), ring_add(r, ring_mul(r, x, z), ring_mul(r, y, z))))
      return fail("right-distributive");
    if (!ring_eq(r, ring_add(r, x, ring_neg(r, x)), zero)) return fail("additive-inverse");
    if (!ring_eq(r, ring_add(r, x, zero), x)) return fail("additive-identity");
    if (!ring_eq(r, ring_mul(r, x, one), x) || !ring_eq(r, ring_mul(r, one, x), x)) return fail("mul-identity");
  }
  return std::nullopt;
}

Outcome ring_commutativity(const RingDescriptor& r, SeedStream& seeds, std::size_t& cases) {
  bool witness = false;
  for (int t = 0; t < 1000; ++t, ++cases) {
    auto x = random_value(r, seeds), y = random_value(r, seeds);
    bool commute = ring_eq(r, ring_mul(r, x, y), ring_mul(r, y, x));
    if (r.is_commutative() && !commute)
      return Failure{-1, "x=" + format_value(r, x) + " y=" + format_value(r, y) + " do not commute"};
    witness = witness || !commute;
  }
  if (!r.is_commutative() && !witness) return Failure{-1, "no noncommuting pair found in 1000 draws"};
  return std::nullopt;
}

Outcome canonical_idempotence(const RingDescriptor& r, SeedStream& seeds, std::size_t& cases) {
  for (int t = 0; t < 500; ++t, ++cases) {
    auto x = random_value(r, seeds), y = random_value(r, seeds);
    for (const auto& v : {ring_add(r, x, y), ring_mul(r, x, y), ring_neg(r, x), x}) {
      if (!(canonicalize(r, v) == v)) return Failure{-1, "canonicalize changed " + format_value(r, v)};
    }
  }
  return std::nullopt;
}

// ---- poly ----------------------------------------------------------------

Outcome division_identity(const RingDescriptor& r, std::size_t max_degree, SeedStream& seeds, std::size_t& cases) {
  for (std::size_t t = 0; t < 500; ++t, ++cases) {
    const std::size_t n = cycle_degree(t, max_degree);
    auto f = random_monic(r, n, seeds);
    auto p = random_polynomial(r, seeds.uniform(0, 2 * max_degree + 1), seeds);
    auto [q, rem] = divmod_monic(p, f);
    if (rem.degree() >= static_cast<long>(n) || !(poly_add(poly_mul(q, f.polynomial()), rem) == p))
      return Failure{static_cast<long>(n), "p=" + format_polynomial(p) + " f=" + format_polynomial(f.polynomial())};
  }
  return std::nullopt;
}

Outcome parse_round_trip(const RingDescriptor& r, std::size_t max_degree, SeedStream& seeds, std::size_t& cases) {
  for (std::size_t t = 0; t < 200; ++t, ++cases) {
    auto p = random_polynomial(r, seeds.uniform(0, max_degree + 1), seeds);
    if (!(parse_polynomial(format_polynomial(p), r) == p) || !(parse_polynomial(format_coefficient_list(p), r) == p))
      return Failure{p.degree(), "p=" + format_coefficient_list(p)};
  }
  return std::nullopt;
}

// ---- companion -----------------------------------------------------------

Outcome companion_annihilation(const RingDescriptor& r, std::size_t max_degree, SeedStream& seeds,
                               std::size_t& cases) {
  for (std::size_t t = 0; t < 200; ++t, ++cases) {
    const std::size_t n = cycle_degree(t, max_degree);
    auto f = random_monic(r, n, seeds);
    const auto c = companion_of(f);
    const auto mr = RingDescriptor::matrix(n, r);
    if (!ring_is_zero(mr, poly_eval(f.polynomial(), as_matrix_value(c.matrix(), mr), mr)))
      return Failure{static_cast<long>(n), "f=" + format_polynomial(f.polynomial()) + " has f(C) != 0"};
  }
  return std::nullopt;
}

Outcome companion_matvec_agrees(const RingDescriptor& r, std::size_t max_degree, SeedStream& seeds,
                                std::size_t& cases) {
  for (std::size_t t = 0; t < 500; ++t, ++cases) {
    const std::size_t n = cycle_degree(t, max_degree);
    auto f = random_monic(r, n, seeds);
    const auto c = companion_of(f);
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_value(r, seeds));
    if (!(companion_matvec(c, v) == mat_vec(c.matrix(), v)))
      return Failure{static_cast<long>(n), "f=" + format_polynomial(f.polynomial()) + " v=" + coords_text(r, v)};
  }
  return std::nullopt;
}

Outcome structure_recurrence(const RingDescriptor& r, std::size_t max_degree, SeedStream& seeds,
                             std::size_t& cases) {
  for (std::size_t n = 1; n <= max_degree; ++n) {
    for (int t = 0; t < 5; ++t, ++cases) {
      auto f = random_monic(r, n, seeds);
      const auto c = companion_of(f);
      const auto s = structure_matrix(c);
      bool ok = s.block(0) == DenseMatrix::identity(r, n);
      for (std::size_t j = 1; ok && j < n; ++j) ok = s.block(j) == mat_mul(c.matrix(), s.block(j - 1));
      if (!ok) return Failure{static_cast<long>(n), "f=" + format_polynomial(f.polynomial())};
    }
  }
  return std::nullopt;
}

Outcome kronecker_orientation(const RingDescriptor& r, std::size_t max_degree, SeedStream& seeds,
                              std::size_t& cases) {
  for (std::size_t t = 0; t < 200; ++t, ++cases) {
    const std::size_t n = cycle_degree(t, max_degree);
    Vector x, y;
    for (std::size_t i = 0; i < n; ++i) x.push_back(random_value(r, seeds));
    for (std::size_t i = 0; i < n; ++i) y.push_back(random_value(r, seeds));
    // Conventional y (x) x: entry p*n + q is y_p x_q.
    Vector conventional;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) conventional.push_back(ring_mul(r, y[p], x[q]));
    if (!(kronecker_left(r, x, y) == conventional))
      return Failure{static_cast<long>(n), "x=" + coords_text(r, x) + " y=" + coords_text(r, y)};
  }
  return std::nullopt;
}

Outcome circulant_identity(const RingDescriptor& r, std::size_t max_degree, SeedStream& seeds, std::size_t& cases) {
  const std::size_t top = std::min<std::size_t>(8, max_degree);
  for (std::size_t t = 0; t < 100; ++t, ++cases) {
    const std::size_t n = cycle_degree(t, top);
    Vector coeffs(n + 1, ring_zero(r));
    coeffs[0] = ring_neg(r, ring_one(r));
    coeffs[n] = ring_one(r);
    const auto ctx = make_context(r, DensePolynomial(r, coeffs));
    auto g = random_polynomial(r, n, seeds);
    const auto mr = RingDescriptor::matrix(n, r);
    const auto circ = circulant_of(g, n);
    const auto at_c = poly_eval(g, as_matrix_value(ctx.companion().matrix(), mr), mr);
    if (!(at_c == as_matrix_value(circ, mr)) || !(regular_representation(ctx, element_from_poly(ctx, g)) == circ))
      return Failure{static_cast<long>(n), "g=" + format_coefficient_list(g)};
  }
  return std::nullopt;
}

// ---- extension -----------------------------------------------------------

Outcome strategy_equivalence(const RingDescriptor& r, std::size_t max_degree, std::size_t moduli, std::size_t pairs,
                             SeedStream& seeds, std::size_t& cases) {
  for (std::size_t n = 1; n <= max_degree; ++n) {
    for (std::size_t m = 0; m < moduli; ++m) {
      const auto f = random_monic(r, n, seeds);
      const auto ctx = make_context(r, f.polynomial());
      for (std::size_t p = 0; p < pairs; ++p, ++cases) {
        auto a = random_element(ctx, seeds), b = random_element(ctx, seeds);
        auto naive = mul_naive(ctx, a, b);
        auto kron = mul_kronecker(ctx, a, b);
        auto reg = mul_regular(ctx, a, b);
        if (!(naive == kron) || !(naive == reg))
          return Failure{static_cast<long>(n), "f=" + format_polynomial(f.polynomial()) +
                                                   " a=" + coords_text(r, a.coords()) +
                                                   " b=" + coords_text(r, b.coords()) +
                                                   " naive=" + coords_text(r, naive.coords()) +
                                                   " kronecker=" + coords_text(r, kron.coords()) +
                                                   " regular=" + coords_text(r, reg.coords())};
      }
    }
  }
  return std::nullopt;
}

Outcome quotient_axioms(const RingDescriptor& r, std::size_t max_degree, SeedStream& seeds, std::size_t& cases) {
  for (std::size_t t = 0; t < 500; ++t, ++cases) {
    const std::size_t n = cycle_degree(t, max_degree);
    const auto ctx = make_context(r, random_monic(r, n, seeds).polynomial());
    auto a = random_element(ctx, seeds), b = random_element(ctx, seeds), c = random_element(ctx, seeds);
    auto mul = [&](const ExtElement& x, const ExtElement& y) { return multiply(ctx, x, y); };
    auto fail = [&](const char* law) {
      return Failure{static_cast<long>(n), std::string(law) + " f=" + format_polynomial(ctx.modulus().polynomial()) +
                                               " a=" + coords_text(r, a.coords()) + " b=" + coords_text(r, b.coords()) +
                                               " c=" + coords_text(r, c.coords())};
    };
    if (!(mul(mul(a, b), c) == mul(a, mul(b, c)))) return fail("associativity");
    if (!(mul(a, add(ctx, b, c)) == add(ctx, mul(a, b), mul(a, c)))) return fail("left-distributivity");
    if (!(mul(add(ctx, a, b), c) == add(ctx, mul(a, c), mul(b, c)))) return fail("right-distributivity");
    if (r.is_commutative() && !(mul(a, b) == mul(b, a))) return fail("commutativity");
  }
  return std::nullopt;
}

Outcome representation_homomorphism(const RingDescriptor& r, std::size_t max_degree, SeedStream& seeds,
                                    std::size_t& cases) {
  for (std::size_t t = 0; t < 200; ++t, ++cases) {
    const std::size_t n = cycle_degree(t, max_degree);
    const auto ctx = make_context(r, random_monic(r, n, seeds).polynomial());
    auto a = random_element(ctx, seeds), b = random_element(ctx, seeds);
    const auto ra = regular_representation(ctx, a);
    const auto rb = regular_representation(ctx, b);
    auto fail = [&](const char* law) {
      return Failure{static_cast<long>(n), std::string(law) + " f=" + format_polynomial(ctx.modulus().polynomial()) +
                                               " a=" + coords_text(r, a.coords()) + " b=" + coords_text(r, b.coords())};
    };
    if (!(ra.column(0) == Vector(a.coords().begin(), a.coords().end()))) return fail("first-column");
    if (!(regular_representation(ctx, multiply(ctx, a, b)) == mat_mul(ra, rb))) return fail("multiplicative");
    if (!(regular_representation(ctx, add(ctx, a, b)) == mat_add(ra, rb))) return fail("additive");
  }
  return std::nullopt;
}

Outcome basis_products(const RingDescriptor& r, std::size_t max_degree, SeedStream& seeds, std::size_t& cases) {
  const std::size_t top = std::min<std::size_t>(10, max_degree);
  for (std::size_t n = 1; n <= top; ++n) {
    const auto ctx = make_context(r, random_monic(r, n, seeds).polynomial());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++cases) {
        auto ei = power_coordinates(ctx, i), ej = power_coordinates(ctx, j);
        auto expected = power_coordinates(ctx, i + j);
        for (auto s : kAllStrategies)
          if (!(multiply(ctx, ei, ej, s) == expected))
            return Failure{static_cast<long>(n), "f=" + format_polynomial(ctx.modulus().polynomial()) + " e" +
                                                     std::to_string(i + 1) + "*e" + std::to_string(j + 1) + " via " +
                                                     std::string(strategy_name(s))};
      }
  }
  return std::nullopt;
}

Outcome odot_consistency(const RingDescriptor& r, std::size_t max_degree, SeedStream& seeds, std::size_t& cases) {
  for (std::size_t t = 0; t < 200; ++t, ++cases) {
    const std::size_t n = cycle_degree(t, max_degree);
    const auto ctx = make_context(r, random_monic(r, n, seeds).polynomial());
    auto g = random_polynomial(r, n, seeds), h = random_polynomial(r, n, seeds);
    auto via_elements = element_to_poly(ctx, mul_naive(ctx, element_from_poly(ctx, g), element_from_poly(ctx, h)));
    if (!(odot(ctx.modulus(), g, h) == via_elements))
      return Failure{static_cast<long>(n), "f=" + format_polynomial(ctx.modulus().polynomial()) +
                                               " g=" + format_coefficient_list(g) + " h=" + format_coefficient_list(h)};
  }
  return std::nullopt;
}

Outcome theorem2_instances(const RingDescriptor& r, SeedStream& seeds, std::size_t& cases) {
  for (std::size_t t = 0; t < 100; ++t, ++cases) {
    const std::size_t n = 2 + t % 5;
    auto f = random_monic(r, n, seeds);
    const auto mr = RingDescriptor::matrix(n, r);
    auto xi = as_matrix_value(companion_of(f).matrix(), mr);
    auto g = random_polynomial(r, n, seeds), h = random_polynomial(r, n, seeds);
    if (!theorem2_check(f, mr, xi, g, h))
      return Failure{static_cast<long>(n), "f=" + format_polynomial(f.polynomial()) +
                                               " g=" + format_coefficient_list(g) + " h=" + format_coefficient_list(h)};
  }
  return std::nullopt;
}

}  // namespace

bool CheckReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

std::string CheckReport::format() const {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.property << " ring=" << r.ring << " cases=" << r.cases;
    if (!r.passed) {
      ++failed;
      out << " degree=" << (r.degree < 0 ? std::string("-") : std::to_string(r.degree))
          << " counterexample: " << r.counterexample;
    }
    out << '\n';
  }
  out << (failed == 0 ? "all " + std::to_string(results.size()) + " properties passed"
                      : std::to_string(failed) + " of " + std::to_string(results.size()) + " properties failed")
      << '\n';
  return out.str();
}

CheckReport run_property_suite(const CheckOptions& options) {
  if (options.max_degree < 1) throw UsageError("max degree must be at least 1");
  Harness h(options);
  const std::size_t d = options.max_degree;

  for (const auto& r : all_rings()) {
    h.run("ring-axioms", r, [&](SeedStream& s, std::size_t& c) { return ring_axioms(r, s, c); });
    h.run(r.is_commutative() ? "commutativity" : "noncommutativity-witness", r,
          [&](SeedStream& s, std::size_t& c) { return ring_commutativity(r, s, c); });
    h.run("canonical-idempotence", r, [&](SeedStream& s, std::size_t& c) { return canonical_idempotence(r, s, c); });
  }
  for (const auto& r : all_rings()) {
    h.run("division-identity", r, [&](SeedStream& s, std::size_t& c) { return division_identity(r, d, s, c); });
    h.run("parse-format-round-trip", r, [&](SeedStream& s, std::size_t& c) { return parse_round_trip(r, d, s, c); });
  }
  for (const auto& r : scalar_rings()) {
    h.run("companion-annihilation", r,
          [&](SeedStream& s, std::size_t& c) { return companion_annihilation(r, d, s, c); });
    h.run("kronecker-orientation", r, [&](SeedStream& s, std::size_t& c) { return kronecker_orientation(r, d, s, c); });
    h.run("circulant-identity", r, [&](SeedStream& s, std::size_t& c) { return circulant_identity(r, d, s, c); });
  }
  for (const auto& r : all_rings()) {
    h.run("companion-matvec", r, [&](SeedStream& s, std::size_t& c) { return companion_matvec_agrees(r, d, s, c); });
    h.run("structure-recurrence", r, [&](SeedStream& s, std::size_t& c) { return structure_recurrence(r, d, s, c); });
  }
  for (const auto& r : scalar_rings()) {
    h.run("strategy-equivalence", r, [&](SeedStream& s, std::size_t& c) {
      return strategy_equivalence(r, d, options.moduli_per_degree, options.pairs_per_modulus, s, c);
    });
  }
  {
    const auto r = noncommutative_ring();
    // 200 pairs per degree, a fresh modulus every 10 pairs.
    h.run("noncommutative-agreement", r, [&](SeedStream& s, std::size_t& c) {
      return strategy_equivalence(r, std::min<std::size_t>(6, d), 20, 10, s, c);
    });
  }
  for (const auto& r : all_rings()) {
    h.run("quotient-axioms", r, [&](SeedStream& s, std::size_t& c) { return quotient_axioms(r, d, s, c); });
    h.run("representation-homomorphism", r,
          [&](SeedStream& s, std::size_t& c) { return representation_homomorphism(r, d, s, c); });
    h.run("basis-products", r, [&](SeedStream& s, std::size_t& c) { return basis_products(r, d, s, c); });
    h.run("odot-consistency", r, [&](SeedStream& s, std::size_t& c) { return odot_consistency(r, d, s, c); });
  }
  for (const auto& r : {RingDescriptor::rational(), RingDescriptor::modular(7)})
    h.run("theorem2", r, [&](SeedStream& s, std::size_t& c) { return theorem2_instances(r, s, c); });

  return h.take();
}

}  // namespace simplext
