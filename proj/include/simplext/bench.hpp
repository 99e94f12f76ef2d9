#pragma once

// Timing comparison of the three multiplication strategies.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "simplext/extension.hpp"

namespace simplext {

struct BenchRow {
  std::size_t degree;
  Strategy strategy;
  std::uint64_t setup_ns;        // make_context
  std::uint64_t per_product_ns;  // mean over `reps` multiply calls
  std::size_t reps;
  std::uint64_t checksum;        // FNV-1a over the formatted products
};

struct BenchReport {
  RingDescriptor ring;
  std::vector<BenchRow> rows;

  /// True when every degree has one checksum shared by all strategies.
  bool checksums_agree() const;
  /// Header `degree,strategy,setup_ns,per_product_ns,reps,checksum`.
  std::string to_csv() const;
};

/// For each degree draws one random monic f and `reps` operand pairs from
/// `seed`, then times every strategy on the same pairs.
BenchReport benchmark_strategies(const RingDescriptor& ring, std::span<const std::size_t> degrees, std::size_t reps,
                                 std::uint64_t seed);

}  // namespace simplext
