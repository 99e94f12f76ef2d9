#include "simplext/ring.hpp"

#include <charconv>
#include <limits>
#include <sstream>

#include "text.hpp"

namespace simplext {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

RingValue lift(ScalarValue v) {
  if (auto* q = std::get_if<Rational>(&v)) return std::move(*q);
  return std::get<Residue>(v);
}

ScalarValue lower(const RingValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return *q;
  return std::get<Residue>(v);
}

ScalarRing scalar_kind(const RingDescriptor& r) {
  return std::visit(overloaded{
                        [](const MatrixRing& mr) { return mr.base; },
                        [](const auto& s) { return ScalarRing(s); },
                    },
                    r.kind());
}

RingDescriptor from_scalar(const ScalarRing& s) {
  return std::visit(overloaded{
                        [](const RationalRing&) { return RingDescriptor::rational(); },
                        [](const ModularRing& m) { return RingDescriptor::modular(m.modulus); },
                    },
                    s);
}

[[noreturn]] void mismatch(const RingDescriptor& r) {
  throw UsageError("value does not belong to ring " + r.to_string());
}

// Residue arithmetic for any 2 <= m < 2^64.
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= m - b ? a - (m - b) : a + b;
}
std::uint64_t neg_mod(std::uint64_t a, std::uint64_t m) { return a == 0 ? 0 : m - a; }
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t m) {
  mpz_class mz;
  mpz_import(mz.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
  mpz_class r = z % mz;
  if (r < 0) r += mz;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

// ---- scalar layer --------------------------------------------------------

void check_scalar(const ScalarRing& s, const ScalarValue& x, const RingDescriptor& whole) {
  if (const auto* m = std::get_if<ModularRing>(&s)) {
    const auto* v = std::get_if<Residue>(&x);
    if (v == nullptr || v->value >= m->modulus) mismatch(whole);
  } else {
    const auto* q = std::get_if<Rational>(&x);
    if (q == nullptr || q->get_den() <= 0) mismatch(whole);
  }
}

ScalarValue scalar_zero(const ScalarRing& s) {
  if (std::holds_alternative<ModularRing>(s)) return Residue{0};
  return Rational(0);
}

ScalarValue scalar_one(const ScalarRing& s) {
  if (std::holds_alternative<ModularRing>(s)) return Residue{1};
  return Rational(1);
}

ScalarValue scalar_add(const ScalarRing& s, const ScalarValue& x, const ScalarValue& y) {
  if (const auto* m = std::get_if<ModularRing>(&s))
    return Residue{add_mod(std::get<Residue>(x).value, std::get<Residue>(y).value, m->modulus)};
  return Rational(std::get<Rational>(x) + std::get<Rational>(y));
}

ScalarValue scalar_neg(const ScalarRing& s, const ScalarValue& x) {
  if (const auto* m = std::get_if<ModularRing>(&s))
    return Residue{neg_mod(std::get<Residue>(x).value, m->modulus)};
  return Rational(-std::get<Rational>(x));
}

void scalar_mul_add(const ScalarRing& s, ScalarValue& acc, const ScalarValue& x, const ScalarValue& y) {
  if (const auto* m = std::get_if<ModularRing>(&s)) {
    auto& a = std::get<Residue>(acc).value;
    a = add_mod(a, mul_mod(std::get<Residue>(x).value, std::get<Residue>(y).value, m->modulus), m->modulus);
    return;
  }
  std::get<Rational>(acc) += std::get<Rational>(x) * std::get<Rational>(y);
}

ScalarValue scalar_canonical(const ScalarRing& s, ScalarValue x) {
  if (const auto* m = std::get_if<ModularRing>(&s))
    return Residue{std::get<Residue>(x).value % m->modulus};
  auto& q = std::get<Rational>(x);
  q.canonicalize();
  return x;
}

ScalarValue scalar_random(const ScalarRing& s, SeedStream& seeds) {
  if (const auto* m = std::get_if<ModularRing>(&s)) return Residue{seeds.uniform(0, m->modulus - 1)};
  long num = static_cast<long>(seeds.uniform_signed(-9, 9));
  long den = static_cast<long>(seeds.uniform_signed(1, 9));
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string scalar_format(const ScalarValue& x) {
  if (const auto* v = std::get_if<Residue>(&x)) return std::to_string(v->value);
  return std::get<Rational>(x).get_str();
}

ScalarValue scalar_read(const ScalarRing& s, detail::Cursor& cur, bool allow_sign) {
  cur.skip_ws();
  bool negative = false;
  if (allow_sign && (cur.peek() == '-' || cur.peek() == '+')) {
    negative = cur.peek() == '-';
    ++cur.pos;
  }
  mpz_class num(std::string(cur.digits()));
  if (negative) num = -num;
  if (const auto* m = std::get_if<ModularRing>(&s)) return Residue{reduce_mpz(num, m->modulus)};
  mpz_class den = 1;
  if (cur.consume('/')) {
    std::size_t at = cur.pos;
    den = mpz_class(std::string(cur.digits()));
    if (den == 0) throw ParseError("zero denominator", at);
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// ---- matrix layer --------------------------------------------------------

MatrixValue matrix_identity(const MatrixRing& mr) {
  MatrixValue out{mr.k, std::vector<ScalarValue>(mr.k * mr.k, scalar_zero(mr.base))};
  for (std::size_t i = 0; i < mr.k; ++i) out.entries[i * mr.k + i] = scalar_one(mr.base);
  return out;
}

MatrixValue matrix_mul(const MatrixRing& mr, const MatrixValue& a, const MatrixValue& b) {
  const std::size_t k = mr.k;
  MatrixValue out{k, std::vector<ScalarValue>(k * k, scalar_zero(mr.base))};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < k; ++j)
        scalar_mul_add(mr.base, out.entries[i * k + j], a.entries[i * k + l], b.entries[l * k + j]);
  return out;
}

template <class Op>
MatrixValue matrix_entrywise(const MatrixValue& a, Op op) {
  MatrixValue out{a.k, {}};
  out.entries.reserve(a.entries.size());
  for (const auto& e : a.entries) out.entries.push_back(op(e));
  return out;
}

}  // namespace

// ---- descriptors ---------------------------------------------------------

RingDescriptor RingDescriptor::rational() { return RingDescriptor(RationalRing{}); }

RingDescriptor RingDescriptor::modular(std::uint64_t m) {
  if (m < 2) throw UsageError("modulus must be at least 2");
  return RingDescriptor(ModularRing{m});
}

RingDescriptor RingDescriptor::matrix(std::size_t k, const RingDescriptor& base) {
  if (k < 1) throw UsageError("matrix size must be at least 1");
  return std::visit(overloaded{
                        [](const MatrixRing&) -> RingDescriptor {
                          throw UsageError("matrix rings nest one level only");
                        },
                        [k](const auto& scalar) { return RingDescriptor(MatrixRing{k, scalar}); },
                    },
                    base.kind_);
}

bool RingDescriptor::is_commutative() const noexcept {
  if (const auto* mr = std::get_if<MatrixRing>(&kind_)) return mr->k == 1;
  return true;
}

RingDescriptor RingDescriptor::scalar_ring() const {
  if (const auto* mr = std::get_if<MatrixRing>(&kind_)) return from_scalar(mr->base);
  return *this;
}

std::string RingDescriptor::to_string() const {
  return std::visit(overloaded{
                        [](const RationalRing&) { return std::string("rational"); },
                        [](const ModularRing& m) { return "mod:" + std::to_string(m.modulus); },
                        [](const MatrixRing& mr) {
                          return "mat:" + std::to_string(mr.k) + ":" + from_scalar(mr.base).to_string();
                        },
                    },
                    kind_);
}

namespace {

std::uint64_t parse_u64(std::string_view text, std::size_t offset) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec == std::errc::result_out_of_range) throw ParseError("number too large", offset);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty())
    throw ParseError("expected a decimal integer", offset);
  return v;
}

RingDescriptor parse_ring_at(std::string_view sel, std::size_t offset) {
  if (sel == "rational") return RingDescriptor::rational();
  if (sel.starts_with("mod:")) return RingDescriptor::modular(parse_u64(sel.substr(4), offset + 4));
  if (sel.starts_with("mat:")) {
    auto rest = sel.substr(4);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected mat:<k>:<base>", offset + 4);
    auto k = parse_u64(rest.substr(0, colon), offset + 4);
    return RingDescriptor::matrix(k, parse_ring_at(rest.substr(colon + 1), offset + 5 + colon));
  }
  throw ParseError("unknown ring '" + std::string(sel) + "'", offset);
}

}  // namespace

RingDescriptor parse_ring(std::string_view selection) { return parse_ring_at(selection, 0); }

// ---- values --------------------------------------------------------------

void check_member(const RingDescriptor& r, const RingValue& x) {
  std::visit(overloaded{
                 [&](const RationalRing&) {
                   const auto* q = std::get_if<Rational>(&x);
                   if (q == nullptr || q->get_den() <= 0) mismatch(r);
                 },
                 [&](const ModularRing& m) {
                   const auto* v = std::get_if<Residue>(&x);
                   if (v == nullptr || v->value >= m.modulus) mismatch(r);
                 },
                 [&](const MatrixRing& mr) {
                   const auto* a = std::get_if<MatrixValue>(&x);
                   if (a == nullptr || a->k != mr.k || a->entries.size() != mr.k * mr.k) mismatch(r);
                   for (const auto& e : a->entries) check_scalar(mr.base, e, r);
                 },
             },
             r.kind());
}

RingValue ring_zero(const RingDescriptor& r) {
  return std::visit(overloaded{
                        [](const RationalRing&) -> RingValue { return Rational(0); },
                        [](const ModularRing&) -> RingValue { return Residue{0}; },
                        [](const MatrixRing& mr) -> RingValue {
                          return MatrixValue{mr.k, std::vector<ScalarValue>(mr.k * mr.k, scalar_zero(mr.base))};
                        },
                    },
                    r.kind());
}

RingValue ring_one(const RingDescriptor& r) {
  return std::visit(overloaded{
                        [](const RationalRing&) -> RingValue { return Rational(1); },
                        [](const ModularRing&) -> RingValue { return Residue{1}; },
                        [](const MatrixRing& mr) -> RingValue { return matrix_identity(mr); },
                    },
                    r.kind());
}

RingValue ring_add(const RingDescriptor& r, const RingValue& x, const RingValue& y) {
  if (const auto* m = std::get_if<ModularRing>(&r.kind())) {
    const auto* a = std::get_if<Residue>(&x);
    const auto* b = std::get_if<Residue>(&y);
    if (a == nullptr || b == nullptr || a->value >= m->modulus || b->value >= m->modulus) mismatch(r);
    return Residue{add_mod(a->value, b->value, m->modulus)};
  }
  check_member(r, x);
  check_member(r, y);
  if (const auto* mr = std::get_if<MatrixRing>(&r.kind())) {
    const auto& a = std::get<MatrixValue>(x);
    const auto& b = std::get<MatrixValue>(y);
    MatrixValue out{mr->k, {}};
    out.entries.reserve(a.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i)
      out.entries.push_back(scalar_add(mr->base, a.entries[i], b.entries[i]));
    return out;
  }
  return Rational(std::get<Rational>(x) + std::get<Rational>(y));
}

RingValue ring_neg(const RingDescriptor& r, const RingValue& x) {
  check_member(r, x);
  return std::visit(overloaded{
                        [&](const RationalRing&) -> RingValue { return Rational(-std::get<Rational>(x)); },
                        [&](const ModularRing& m) -> RingValue {
                          return Residue{neg_mod(std::get<Residue>(x).value, m.modulus)};
                        },
                        [&](const MatrixRing& mr) -> RingValue {
                          return matrix_entrywise(std::get<MatrixValue>(x),
                                                  [&](const ScalarValue& e) { return scalar_neg(mr.base, e); });
                        },
                    },
                    r.kind());
}

RingValue ring_sub(const RingDescriptor& r, const RingValue& x, const RingValue& y) {
  return ring_add(r, x, ring_neg(r, y));
}

RingValue ring_mul(const RingDescriptor& r, const RingValue& x, const RingValue& y) {
  if (const auto* m = std::get_if<ModularRing>(&r.kind())) {
    const auto* a = std::get_if<Residue>(&x);
    const auto* b = std::get_if<Residue>(&y);
    if (a == nullptr || b == nullptr || a->value >= m->modulus || b->value >= m->modulus) mismatch(r);
    return Residue{mul_mod(a->value, b->value, m->modulus)};
  }
  check_member(r, x);
  check_member(r, y);
  if (const auto* mr = std::get_if<MatrixRing>(&r.kind()))
    return matrix_mul(*mr, std::get<MatrixValue>(x), std::get<MatrixValue>(y));
  return Rational(std::get<Rational>(x) * std::get<Rational>(y));
}

void ring_mul_add(const RingDescriptor& r, RingValue& acc, const RingValue& x, const RingValue& y) {
  if (const auto* m = std::get_if<ModularRing>(&r.kind())) {
    auto* c = std::get_if<Residue>(&acc);
    const auto* a = std::get_if<Residue>(&x);
    const auto* b = std::get_if<Residue>(&y);
    if (c == nullptr || a == nullptr || b == nullptr || a->value >= m->modulus || b->value >= m->modulus ||
        c->value >= m->modulus)
      mismatch(r);
    c->value = add_mod(c->value, mul_mod(a->value, b->value, m->modulus), m->modulus);
    return;
  }
  if (std::holds_alternative<RationalRing>(r.kind())) {
    check_member(r, x);
    check_member(r, y);
    check_member(r, acc);
    std::get<Rational>(acc) += std::get<Rational>(x) * std::get<Rational>(y);
    return;
  }
  acc = ring_add(r, acc, ring_mul(r, x, y));
}

bool ring_eq(const RingDescriptor& r, const RingValue& x, const RingValue& y) {
  check_member(r, x);
  check_member(r, y);
  return x == y;
}

bool ring_is_zero(const RingDescriptor& r, const RingValue& x) {
  if (const auto* v = std::get_if<Residue>(&x); v != nullptr && std::holds_alternative<ModularRing>(r.kind()))
    return v->value == 0;
  return ring_eq(r, x, ring_zero(r));
}

bool ring_is_one(const RingDescriptor& r, const RingValue& x) { return ring_eq(r, x, ring_one(r)); }

RingValue canonicalize(const RingDescriptor& r, RingValue x) {
  auto shape_error = [&]() -> RingValue { mismatch(r); };
  return std::visit(overloaded{
                        [&](const MatrixRing& mr) -> RingValue {
                          auto* a = std::get_if<MatrixValue>(&x);
                          if (a == nullptr || a->k != mr.k || a->entries.size() != mr.k * mr.k)
                            return shape_error();
                          for (auto& e : a->entries) {
                            if (e.index() != scalar_zero(mr.base).index()) return shape_error();
                            e = scalar_canonical(mr.base, std::move(e));
                          }
                          return x;
                        },
                        [&](const auto& scalar) -> RingValue {
                          ScalarRing s = scalar;
                          if (x.index() != scalar_zero(s).index()) return shape_error();
                          return lift(scalar_canonical(s, lower(x)));
                        },
                    },
                    r.kind());
}

RingValue ring_from_integer(const RingDescriptor& r, long long n) {
  auto scalar = [n](const ScalarRing& s) -> ScalarValue {
    if (const auto* m = std::get_if<ModularRing>(&s)) return Residue{reduce_mpz(mpz_class(std::to_string(n)), m->modulus)};
    return Rational(mpz_class(std::to_string(n)));
  };
  return std::visit(overloaded{
                        [&](const MatrixRing& mr) -> RingValue {
                          MatrixValue out{mr.k, std::vector<ScalarValue>(mr.k * mr.k, scalar_zero(mr.base))};
                          for (std::size_t i = 0; i < mr.k; ++i) out.entries[i * mr.k + i] = scalar(mr.base);
                          return out;
                        },
                        [&](const auto& s) -> RingValue { return lift(scalar(s)); },
                    },
                    r.kind());
}

RingValue embed_scalar(const RingDescriptor& r, const RingValue& scalar) {
  const auto* mr = std::get_if<MatrixRing>(&r.kind());
  if (mr == nullptr) throw UsageError("embed_scalar needs a matrix ring, got " + r.to_string());
  check_member(r.scalar_ring(), scalar);
  MatrixValue out{mr->k, std::vector<ScalarValue>(mr->k * mr->k, scalar_zero(mr->base))};
  ScalarValue s = lower(scalar);
  for (std::size_t i = 0; i < mr->k; ++i) out.entries[i * mr->k + i] = s;
  return out;
}

std::uint64_t SeedStream::uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
}

long long SeedStream::uniform_signed(long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(engine_);
}

RingValue random_value(const RingDescriptor& r, SeedStream& seeds) {
  return std::visit(overloaded{
                        [&](const MatrixRing& mr) -> RingValue {
                          MatrixValue out{mr.k, {}};
                          out.entries.reserve(mr.k * mr.k);
                          for (std::size_t i = 0; i < mr.k * mr.k; ++i)
                            out.entries.push_back(scalar_random(mr.base, seeds));
                          return out;
                        },
                        [&](const auto& s) -> RingValue { return lift(scalar_random(ScalarRing(s), seeds)); },
                    },
                    r.kind());
}

namespace detail {

bool starts_value(const RingDescriptor& r, Cursor& cur) {
  char c = cur.peek();
  if (r.is_matrix() && c == '[') return true;
  return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

RingValue read_value(const RingDescriptor& r, Cursor& cur, bool allow_sign) {
  if (const auto* mr = std::get_if<MatrixRing>(&r.kind())) {
    if (cur.peek() != '[') return embed_scalar(r, lift(scalar_read(mr->base, cur, allow_sign)));
    MatrixValue out{mr->k, {}};
    cur.expect('[');
    std::size_t rows = 0;
    do {
      std::size_t row_start = cur.pos;
      cur.expect('[');
      std::size_t cols = 0;
      do {
        out.entries.push_back(scalar_read(mr->base, cur, true));
        ++cols;
      } while (cur.consume(','));
      cur.expect(']');
      if (cols != mr->k) throw ParseError("matrix row must have " + std::to_string(mr->k) + " entries", row_start);
      ++rows;
    } while (cur.consume(';') || cur.consume(','));
    if (rows != mr->k) cur.fail("matrix must have " + std::to_string(mr->k) + " rows");
    cur.expect(']');
    return out;
  }
  return lift(scalar_read(scalar_kind(r), cur, allow_sign));
}

}  // namespace detail

RingValue parse_value(const RingDescriptor& r, std::string_view text) {
  detail::Cursor cur{text};
  RingValue v = detail::read_value(r, cur, true);
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return v;
}

std::string format_value(const RingDescriptor& r, const RingValue& x) {
  check_member(r, x);
  if (const auto* a = std::get_if<MatrixValue>(&x)) {
    std::string out = "[";
    for (std::size_t i = 0; i < a->k; ++i) {
      if (i > 0) out += ';';
      out += '[';
      for (std::size_t j = 0; j < a->k; ++j) {
        if (j > 0) out += ',';
        out += scalar_format(a->at(i, j));
      }
      out += ']';
    }
    return out + "]";
  }
  if (const auto* v = std::get_if<Residue>(&x)) return std::to_string(v->value);
  return std::get<Rational>(x).get_str();
}

}  // namespace simplext
