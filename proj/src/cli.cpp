#include "simplext/cli.hpp"

#include <charconv>
#include <functional>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "simplext/bench.hpp"
#include "simplext/extension.hpp"

namespace simplext::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Setup {
  RingDescriptor ring;
  ExtensionContext ctx;
};

Setup load(const ExtensionOptions& options) {
  auto ring = parse_ring(options.ring);
  if (options.modulus.empty()) throw UsageError("--modulus is required");
  auto f = parse_polynomial(options.modulus, ring);
  return {ring, make_context(ring, f)};
}

Json strings(const RingDescriptor& r, std::span<const RingValue> values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(format_value(r, v));
  return arr;
}

std::string plain_list(const RingDescriptor& r, std::span<const RingValue> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += format_value(r, values[i]);
  }
  return out + "]";
}

void print_coordinates(const ExtensionOptions& options, const Setup& s, const ExtElement& e, std::ostream& out,
                       const std::function<void(Json&)>& extra = {}) {
  if (options.output == OutputFormat::json) {
    Json doc;
    doc["ring"] = s.ring.to_string();
    doc["modulus"] = strings(s.ring, s.ctx.modulus().polynomial().coefficients());
    if (extra) extra(doc);
    doc["coordinates"] = strings(s.ring, e.coords());
    out << doc.dump() << '\n';
  } else {
    out << plain_list(s.ring, e.coords()) << '\n';
  }
}

// Runs `body`, mapping library errors onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace

int run_mul(const ExtensionOptions& options, std::string_view a, std::string_view b, std::string_view strategy,
            bool verify, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto s = load(options);
    auto chosen = parse_strategy(strategy);
    auto x = element_from_poly(s.ctx, parse_polynomial(a, s.ring));
    auto y = element_from_poly(s.ctx, parse_polynomial(b, s.ring));
    auto product = multiply(s.ctx, x, y, chosen);
    if (verify) {
      for (auto other : kAllStrategies) {
        auto check = multiply(s.ctx, x, y, other);
        if (!(check == product)) {
          err << "strategy disagreement: " << strategy_name(chosen) << " gives " << plain_list(s.ring, product.coords())
              << " but " << strategy_name(other) << " gives " << plain_list(s.ring, check.coords()) << '\n';
          return kExitDisagreement;
        }
      }
    }
    print_coordinates(options, s, product, out);
    return kExitOk;
  });
}

int run_pow(const ExtensionOptions& options, std::string_view exponent, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!exponent.empty() && exponent.front() == '-') throw UsageError("exponent must be non-negative");
    std::uint64_t k = 0;
    auto [end, ec] = std::from_chars(exponent.data(), exponent.data() + exponent.size(), k);
    if (ec != std::errc() || end != exponent.data() + exponent.size())
      throw ParseError("exponent must be a decimal integer", static_cast<std::size_t>(end - exponent.data()));
    auto s = load(options);
    print_coordinates(options, s, power_coordinates(s.ctx, k), out,
                      [&](Json& doc) { doc["exponent"] = std::to_string(k); });
    return kExitOk;
  });
}

int run_table(const ExtensionOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto s = load(options);
    const auto& m = s.ctx.structure().matrix();
    const std::size_t n = s.ctx.degree();
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) cells[r][c] = format_value(s.ring, m.at(r, c));

    if (options.output == OutputFormat::json) {
      Json doc;
      doc["ring"] = s.ring.to_string();
      doc["modulus"] = strings(s.ring, s.ctx.modulus().polynomial().coefficients());
      doc["rows"] = cells;
      out << doc.dump() << '\n';
      return kExitOk;
    }
    std::vector<std::size_t> width(m.cols(), 0);
    for (const auto& row : cells)
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : cells) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c > 0) line += (c % n == 0) ? " | " : " ";
        line += std::string(width[c] - row[c].size(), ' ') + row[c];
      }
      out << line << '\n';
    }
    return kExitOk;
  });
}

int run_check(const CheckOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto report = run_property_suite(options);
    out << report.format();
    if (!report.passed()) {
      err << "property check failed\n";
      return kExitCheckFailed;
    }
    return kExitOk;
  });
}

int run_bench(std::string_view ring, std::string_view degrees, std::size_t reps, std::uint64_t seed,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto r = parse_ring(ring);
    std::vector<std::size_t> list;
    std::size_t pos = 0;
    while (pos <= degrees.size()) {
      auto comma = std::min(degrees.find(',', pos), degrees.size());
      auto item = degrees.substr(pos, comma - pos);
      std::size_t d = 0;
      auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), d);
      if (ec != std::errc() || end != item.data() + item.size() || d < 1)
        throw ParseError("degrees must be a comma-separated list of positive integers", pos);
      list.push_back(d);
      pos = comma + 1;
    }
    auto report = benchmark_strategies(r, list, reps, seed);
    out << report.to_csv();
    if (!report.checksums_agree()) {
      err << "checksum mismatch between strategies\n";
      return kExitDisagreement;
    }
    return kExitOk;
  });
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact multiplication in simple integral extensions R[X]/(f)"};
  app.require_subcommand(1);

  ExtensionOptions ext;
  std::string output = "plain";
  auto add_extension_flags = [&](CLI::App* sub) {
    sub->add_option("--ring", ext.ring, "rational | mod:<m> | mat:<k>:<base>")->capture_default_str();
    sub->add_option("--modulus", ext.modulus, "monic polynomial f, e.g. \"x^2+1\"")->required();
    sub->add_option("--output", output, "plain | json")
        ->capture_default_str()
        ->check(CLI::IsMember({"plain", "json"}));
  };

  std::string a, b, strategy = "regular", exponent;
  bool verify = false;
  auto* mul = app.add_subcommand("mul", "multiply two elements");
  add_extension_flags(mul);
  mul->add_option("a", a, "left operand")->required();
  mul->add_option("b", b, "right operand")->required();
  mul->add_option("--strategy", strategy, "naive | kronecker | regular")->capture_default_str();
  mul->add_flag("--verify", verify, "run every strategy and compare before printing");

  auto* pow = app.add_subcommand("pow", "coordinates of xi^k");
  add_extension_flags(pow);
  pow->add_option("k", exponent, "non-negative exponent")->required();

  auto* table = app.add_subcommand("table", "print (I C ... C^{n-1})");
  add_extension_flags(table);

  CheckOptions check;
  auto* chk = app.add_subcommand("check", "run the seeded property suite");
  chk->add_option("--seed", check.seed)->capture_default_str();
  chk->add_option("--max-degree", check.max_degree)->capture_default_str()->check(CLI::PositiveNumber);
  chk->add_option("--moduli", check.moduli_per_degree, "random moduli per degree")->capture_default_str();
  chk->add_option("--pairs", check.pairs_per_modulus, "random pairs per modulus")->capture_default_str();

  std::string bench_ring = "mod:2305843009213693951", degrees = "4,16,64,256";
  std::size_t reps = 5;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "time the three strategies, CSV output");
  bench->add_option("--ring", bench_ring)->capture_default_str();
  bench->add_option("--degrees", degrees)->capture_default_str();
  bench->add_option("--reps", reps)->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  ext.output = output == "json" ? OutputFormat::json : OutputFormat::plain;

  if (mul->parsed()) return run_mul(ext, a, b, strategy, verify, out, err);
  if (pow->parsed()) return run_pow(ext, exponent, out, err);
  if (table->parsed()) return run_table(ext, out, err);
  if (chk->parsed()) return run_check(check, out, err);
  return run_bench(bench_ring, degrees, reps, bench_seed, out, err);
}

}  // namespace simplext::cli
