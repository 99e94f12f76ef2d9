#include "simplext/bench.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "simplext/sampling.hpp"

namespace simplext {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point since) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - since).count());
}

void fnv_mix(std::uint64_t& h, std::string_view s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
}

}  // namespace

bool BenchReport::checksums_agree() const {
  std::map<std::size_t, std::uint64_t> seen;
  for (const auto& row : rows) {
    auto [it, inserted] = seen.try_emplace(row.degree, row.checksum);
    if (!inserted && it->second != row.checksum) return false;
  }
  return true;
}

std::string BenchReport::to_csv() const {
  std::ostringstream out;
  out << "degree,strategy,setup_ns,per_product_ns,reps,checksum\n";
  for (const auto& row : rows)
    out << row.degree << ',' << strategy_name(row.strategy) << ',' << row.setup_ns << ',' << row.per_product_ns << ','
        << row.reps << ',' << row.checksum << '\n';
  return out.str();
}

BenchReport benchmark_strategies(const RingDescriptor& ring, std::span<const std::size_t> degrees, std::size_t reps,
                                 std::uint64_t seed) {
  if (reps < 1) throw UsageError("reps must be at least 1");
  BenchReport report{ring, {}};
  for (std::size_t n : degrees) {
    if (n < 1) throw UsageError("benchmark degrees must be at least 1");
    SeedStream seeds(seed ^ (0x9e3779b97f4a7c15ull * n));
    const auto f = random_monic(ring, n, seeds);
    std::vector<std::pair<Vector, Vector>> operands;
    for (std::size_t i = 0; i < reps; ++i) {
      Vector a, b;
      for (std::size_t j = 0; j < n; ++j) a.push_back(random_value(ring, seeds));
      for (std::size_t j = 0; j < n; ++j) b.push_back(random_value(ring, seeds));
      operands.emplace_back(std::move(a), std::move(b));
    }

    for (auto strategy : kAllStrategies) {
      auto start = Clock::now();
      const auto ctx = make_context(ring, f.polynomial());
      const std::uint64_t setup = elapsed_ns(start);

      std::vector<ExtElement> lhs, rhs, products;
      for (const auto& [a, b] : operands) {
        lhs.push_back(ctx.element(a));
        rhs.push_back(ctx.element(b));
      }
      products.reserve(reps);
      start = Clock::now();
      for (std::size_t i = 0; i < reps; ++i) products.push_back(multiply(ctx, lhs[i], rhs[i], strategy));
      const std::uint64_t total = elapsed_ns(start);

      std::uint64_t checksum = 1469598103934665603ull;
      for (const auto& p : products)
        for (const auto& c : p.coords()) {
          fnv_mix(checksum, format_value(ring, c));
          fnv_mix(checksum, ",");
        }
      report.rows.push_back({n, strategy, setup, total / reps, reps, checksum});
    }
  }
  return report;
}

}  // namespace simplext
