// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "simplext/cli.hpp"
#include "simplext/sampling.hpp"

using namespace simplext;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) {
    o.ok = false;
    o.detail += " (over time limit)";
  }
  char timing[64];
  if (limit_s > 0)
    std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", secs, limit_s);
  else
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
  std::printf("[%s] %s %s: %s [%s]\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), timing);
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

RingDescriptor Q() { return RingDescriptor::rational(); }

Vector coords(const ExtElement& e) { return Vector(e.coords().begin(), e.coords().end()); }

std::string count(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

// Independent of the ring layer: plain mpq_class and machine integers.

Outcome complex_golden() {
  auto ctx = make_context(Q(), parse_polynomial("x^2+1", Q()));
  SeedStream seeds(101);
  std::size_t checked = 0;
  for (int t = 0; t < 500; ++t) {
    auto b = random_element(ctx, seeds), c = random_element(ctx, seeds);
    const mpq_class& b0 = std::get<Rational>(b.coords()[0]);
    const mpq_class& b1 = std::get<Rational>(b.coords()[1]);
    const mpq_class& c0 = std::get<Rational>(c.coords()[0]);
    const mpq_class& c1 = std::get<Rational>(c.coords()[1]);
    mpq_class re = b0 * c0 - b1 * c1, im = b1 * c0 + b0 * c1;
    re.canonicalize();
    im.canonicalize();
    for (auto s : kAllStrategies) {
      auto got = multiply(ctx, b, c, s);
      if (!(std::get<Rational>(got.coords()[0]) == re && std::get<Rational>(got.coords()[1]) == im))
        return {false, "mismatch under " + std::string(strategy_name(s))};
      ++checked;
    }
  }
  return {true, count(checked, "products exact")};
}

Outcome circulant_golden() {
  std::size_t checked = 0;
  {
    auto ctx = make_context(Q(), parse_polynomial("x^3-1", Q()));
    SeedStream seeds(202);
    for (int t = 0; t < 500; ++t) {
      auto b = random_element(ctx, seeds), c = random_element(ctx, seeds);
      auto bv = [&](int i) { return std::get<Rational>(b.coords()[i]); };
      auto cv = [&](int i) { return std::get<Rational>(c.coords()[i]); };
      mpq_class expected[3] = {bv(0) * cv(0) + bv(2) * cv(1) + bv(1) * cv(2),
                               bv(1) * cv(0) + bv(0) * cv(1) + bv(2) * cv(2),
                               bv(2) * cv(0) + bv(1) * cv(1) + bv(0) * cv(2)};
      for (auto s : kAllStrategies) {
        auto got = multiply(ctx, b, c, s);
        for (int i = 0; i < 3; ++i)
          if (std::get<Rational>(got.coords()[i]) != expected[i])
            return {false, "rational mismatch under " + std::string(strategy_name(s))};
        ++checked;
      }
    }
  }
  {
    auto r = RingDescriptor::modular(7);
    auto ctx = make_context(r, parse_polynomial("x^3-1", r));
    SeedStream seeds(203);
    for (int t = 0; t < 500; ++t) {
      auto b = random_element(ctx, seeds), c = random_element(ctx, seeds);
      auto bv = [&](int i) { return std::get<Residue>(b.coords()[i]).value; };
      auto cv = [&](int i) { return std::get<Residue>(c.coords()[i]).value; };
      std::uint64_t expected[3] = {(bv(0) * cv(0) + bv(2) * cv(1) + bv(1) * cv(2)) % 7,
                                   (bv(1) * cv(0) + bv(0) * cv(1) + bv(2) * cv(2)) % 7,
                                   (bv(2) * cv(0) + bv(1) * cv(1) + bv(0) * cv(2)) % 7};
      for (auto s : kAllStrategies) {
        auto got = multiply(ctx, b, c, s);
        for (int i = 0; i < 3; ++i)
          if (std::get<Residue>(got.coords()[i]).value != expected[i])
            return {false, "mod:7 mismatch under " + std::string(strategy_name(s))};
        ++checked;
      }
    }
  }
  return {true, count(checked, "products exact over rational and mod:7")};
}

Outcome structure_golden() {
  auto compare = [](const char* f, std::size_t rows, const std::vector<long>& frozen) {
    auto s = structure_matrix(MonicModulus(parse_polynomial(f, Q()))).matrix();
    if (s.rows() != rows || s.cols() != rows * rows) return false;
    for (std::size_t i = 0; i < frozen.size(); ++i)
      if (std::get<Rational>(s.entries()[i]) != frozen[i]) return false;
    return true;
  };
  const std::vector<long> cyclic = {1, 0, 0, 0, 0, 1, 0, 1, 0,  //
                                    0, 1, 0, 1, 0, 0, 0, 0, 1,  //
                                    0, 0, 1, 0, 1, 0, 1, 0, 0};
  const std::vector<long> gaussian = {1, 0, 0, -1,  //
                                      0, 1, 1, 0};
  bool a = compare("x^3-1", 3, cyclic), b = compare("x^2+1", 2, gaussian);
  return {a && b, std::string("3x9 ") + (a ? "matches" : "differs") + ", 2x4 " + (b ? "matches" : "differs")};
}

Outcome strategy_equivalence() {
  std::size_t products = 0;
  for (auto sel : {"rational", "mod:2", "mod:7", "mod:256"}) {
    auto r = parse_ring(sel);
    SeedStream seeds(404);
    for (std::size_t n = 1; n <= 12; ++n)
      for (int k = 0; k < 50; ++k) {
        auto ctx = make_context(r, random_monic(r, n, seeds).polynomial());
        for (int p = 0; p < 10; ++p) {
          auto a = random_element(ctx, seeds), b = random_element(ctx, seeds);
          auto expected = mul_naive(ctx, a, b);
          if (!(mul_kronecker(ctx, a, b) == expected) || !(mul_regular(ctx, a, b) == expected))
            return {false, std::string(sel) + " disagreement at degree " + std::to_string(n) + ", f = " +
                               format_polynomial(ctx.modulus().polynomial())};
          ++products;
        }
      }
  }
  return {true, count(products, "operand pairs, three strategies equal")};
}

Outcome noncommutative_agreement() {
  auto r = parse_ring("mat:2:mod:5");
  SeedStream seeds(505);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + t % 6;
    auto ctx = make_context(r, random_monic(r, n, seeds).polynomial());
    auto a = random_element(ctx, seeds), b = random_element(ctx, seeds);
    auto expected = mul_naive(ctx, a, b);
    if (!(mul_kronecker(ctx, a, b) == expected) || !(mul_regular(ctx, a, b) == expected))
      return {false, "disagreement at degree " + std::to_string(n)};
  }
  return {true, "200 pairs over mat:2:mod:5, degrees 1-6"};
}

Outcome regular_representation_suite() {
  std::size_t pairs = 0;
  for (auto sel : {"rational", "mod:2", "mod:7", "mod:256", "mat:2:mod:5"}) {
    auto r = parse_ring(sel);
    SeedStream seeds(606);
    for (int t = 0; t < 200; ++t) {
      std::size_t n = 1 + t % 8;
      auto ctx = make_context(r, random_monic(r, n, seeds).polynomial());
      auto a = random_element(ctx, seeds), b = random_element(ctx, seeds);
      auto ra = regular_representation(ctx, a), rb = regular_representation(ctx, b);
      if (ra.column(0) != coords(a)) return {false, std::string(sel) + ": first column is not [a]"};
      if (!(regular_representation(ctx, mul_naive(ctx, a, b)) == mat_mul(ra, rb)))
        return {false, std::string(sel) + ": rep(ab) != rep(a) rep(b)"};
      if (!(regular_representation(ctx, add(ctx, a, b)) == mat_add(ra, rb)))
        return {false, std::string(sel) + ": rep(a+b) != rep(a) + rep(b)"};
      ++pairs;
    }
  }
  return {true, count(pairs, "pairs over 5 rings")};
}

Outcome evaluation_homomorphism() {
  std::size_t cases = 0;
  for (auto sel : {"mod:7", "rational"}) {
    auto r = parse_ring(sel);
    SeedStream seeds(707);
    for (int t = 0; t < 100; ++t) {
      std::size_t n = 2 + t % 5;
      auto f = random_monic(r, n, seeds);
      auto mr = RingDescriptor::matrix(n, r);
      auto xi = as_matrix_value(companion_of(f).matrix(), mr);
      if (!theorem2_check(f, mr, xi, random_polynomial(r, n, seeds), random_polynomial(r, n, seeds)))
        return {false, std::string(sel) + " failure at f = " + format_polynomial(f.polynomial())};
      ++cases;
    }
  }
  auto r = Q();
  MonicModulus f(parse_polynomial("x^3-1", r));
  auto mr = RingDescriptor::matrix(3, r);
  auto xi = as_matrix_value(companion_of(f).matrix(), mr);
  SeedStream seeds(708);
  for (int t = 0; t < 20; ++t, ++cases)
    if (!theorem2_check(f, mr, xi, random_polynomial(r, 3, seeds), random_polynomial(r, 3, seeds)))
      return {false, "X^3 - 1 instance fails"};
  return {true, count(cases, "cases including X^3 - 1")};
}

Outcome companion_annihilation() {
  std::size_t cases = 0;
  for (auto sel : {"rational", "mod:2", "mod:7", "mod:256"}) {
    auto r = parse_ring(sel);
    SeedStream seeds(808);
    for (int t = 0; t < 200; ++t) {
      std::size_t n = 1 + t % 12;
      auto f = random_monic(r, n, seeds);
      auto mr = RingDescriptor::matrix(n, r);
      if (!ring_is_zero(mr, poly_eval(f.polynomial(), as_matrix_value(companion_of(f).matrix(), mr), mr)))
        return {false, std::string(sel) + ": f(C) != 0 for f = " + format_polynomial(f.polynomial())};
      ++cases;
    }
  }
  return {true, count(cases, "monic f over 4 scalar rings")};
}

Outcome circulant_identity() {
  std::size_t cases = 0;
  for (auto sel : {"rational", "mod:7"}) {
    auto r = parse_ring(sel);
    SeedStream seeds(909);
    for (std::size_t n = 1; n <= 8; ++n) {
      auto f = parse_polynomial("x^" + std::to_string(n) + " - 1", r);
      auto ctx = make_context(r, f);
      auto mr = RingDescriptor::matrix(n, r);
      auto c = as_matrix_value(ctx.companion().matrix(), mr);
      for (int t = 0; t < 100; ++t) {
        auto g = random_polynomial(r, n, seeds);
        auto circ = circulant_of(g, n);
        if (!(poly_eval(g, c, mr) == as_matrix_value(circ, mr)) ||
            !(regular_representation(ctx, element_from_poly(ctx, g)) == circ))
          return {false, std::string(sel) + " mismatch at n = " + std::to_string(n)};
        ++cases;
      }
    }
  }
  return {true, count(cases, "polynomials g, n = 1..8")};
}

Outcome benchmark_sanity() {
  std::ostringstream out, err;
  int code = cli::run_bench("mod:2305843009213693951", "4,16,64,256", 3, 1, out, err);
  if (code != cli::kExitOk) {
    auto msg = err.str();
    while (!msg.empty() && msg.back() == '\n') msg.pop_back();
    return {false, "bench exited " + std::to_string(code) + ": " + msg};
  }

  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  if (line != "degree,strategy,setup_ns,per_product_ns,reps,checksum") return {false, "unexpected header"};
  struct Row {
    std::size_t degree;
    std::string strategy;
    double per_product;
    std::string checksum;
  };
  std::vector<Row> rows;
  while (std::getline(lines, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 6) return {false, "malformed row: " + line};
    rows.push_back({std::stoul(f[0]), f[1], std::stod(f[3]), f[5]});
  }
  if (rows.size() != 12) return {false, "expected 12 rows"};
  for (const auto& a : rows)
    for (const auto& b : rows)
      if (a.degree == b.degree && a.checksum != b.checksum)
        return {false, "checksums differ at degree " + std::to_string(a.degree)};
  double kron = 0, reg = 0;
  for (const auto& r : rows)
    if (r.degree == 256) {
      if (r.strategy == "kronecker") kron = r.per_product;
      if (r.strategy == "regular") reg = r.per_product;
    }
  char buf[128];
  std::snprintf(buf, sizeof buf, "checksums equal; n=256 kronecker %.0f ns vs regular %.0f ns per product", kron, reg);
  return {kron > reg && reg > 0, buf};
}

}  // namespace

int main() {
  report("AC1", "complex multiplication over X^2+1", 1, complex_golden);
  report("AC2", "cyclic products over X^3-1", 1, circulant_golden);
  report("AC3", "structure matrices", 0, structure_golden);
  report("AC4", "strategy equivalence", 30, strategy_equivalence);
  report("AC5", "noncommutative coefficients", 0, noncommutative_agreement);
  report("AC6", "regular representation", 0, regular_representation_suite);
  report("AC7", "evaluation at a root", 0, evaluation_homomorphism);
  report("AC8", "f(C) = 0", 0, companion_annihilation);
  report("AC9", "circulant identity", 0, circulant_identity);
  report("AC10", "benchmark sanity", 60, benchmark_sanity);
  std::printf("%s\n", failures == 0 ? "all acceptance criteria passed"
                                     : (std::to_string(failures) + " acceptance criteria failed").c_str());
  return failures == 0 ? 0 : 1;
}
