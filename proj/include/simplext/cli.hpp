#pragma once

// Command-line surface. Each subcommand writes its payload to `out` and
// diagnostics to `err`, and returns the process exit code.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "simplext/check.hpp"

namespace simplext::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDisagreement = 3;

enum class OutputFormat { plain, json };

struct ExtensionOptions {
  std::string ring = "rational";
  std::string modulus;
  OutputFormat output = OutputFormat::plain;
};

int run_mul(const ExtensionOptions& options, std::string_view a, std::string_view b, std::string_view strategy,
            bool verify, std::ostream& out, std::ostream& err);
int run_pow(const ExtensionOptions& options, std::string_view exponent, std::ostream& out, std::ostream& err);
int run_table(const ExtensionOptions& options, std::ostream& out, std::ostream& err);
int run_check(const CheckOptions& options, std::ostream& out, std::ostream& err);
int run_bench(std::string_view ring, std::string_view degrees, std::size_t reps, std::uint64_t seed,
              std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace simplext::cli
