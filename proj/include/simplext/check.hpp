#pragma once

// Seeded property suite covering the ring, polynomial, companion and
// extension invariants. The report contains no timings, so a given seed and
// set of bounds always produces the same text.

#include <cstdint>
#include <string>
#include <vector>

namespace simplext {

struct CheckOptions {
  std::uint64_t seed = 1;
  std::size_t max_degree = 12;
  std::size_t moduli_per_degree = 50;
  std::size_t pairs_per_modulus = 10;
};

struct PropertyResult {
  std::string property;
  std::string ring;
  std::size_t cases = 0;
  bool passed = true;
  // Set on failure only.
  long degree = -1;
  std::string counterexample;
};

struct CheckReport {
  std::vector<PropertyResult> results;

  bool passed() const;
  std::string format() const;
};

CheckReport run_property_suite(const CheckOptions& options);

}  // namespace simplext
