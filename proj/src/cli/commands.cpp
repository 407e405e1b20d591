#include "umbral/cli/commands.hpp"

#include "umbral/cli/render.hpp"
#include "umbral/cli/sweeps.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace umbral::cli {

namespace {

struct Globals {
  std::string format_name = "plain";
  unsigned jobs = 1;

  [[nodiscard]] OutputFormat format() const { return *parse_format(format_name); }
};

// Every command sizes its own cache to the request.
BernoulliCache cache_for(unsigned max_r, unsigned max_s) { return BernoulliCache(max_r + max_s + 2); }

int cmd_value(const Globals& g, unsigned r, unsigned s, bool as_poly, std::ostream& out) {
  const auto cache = cache_for(r, s);
  const OutputFormat format = g.format();
  if (as_poly) {
    const Poly p = bs_polynomial(cache, r, s);
    if (format == OutputFormat::json) {
      Json doc;
      doc["r"] = r;
      doc["s"] = s;
      Json coeffs = Json::array();
      for (const auto& c : p.coeffs()) coeffs.push_back(rational_to_json(c));
      doc["coeffs"] = std::move(coeffs);
      out << doc.dump() << '\n';
    } else {
      out << render_poly(p, format);
    }
    return kExitOk;
  }
  const Rational v = bs_direct(cache, r, s);
  switch (format) {
    case OutputFormat::json: {
      Json doc;
      doc["r"] = r;
      doc["s"] = s;
      doc["value"] = rational_to_json(v);
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::latex:
      out << latex_rational(v) << '\n';
      break;
    default:
      out << v.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_table(const Globals& g, unsigned max_r, unsigned max_s, bool denoms, std::ostream& out) {
  const auto cache = cache_for(max_r, max_s);
  const BsTable table = bs_table_recursive(cache, max_r, max_s);
  if (denoms) {
    IntGrid grid(max_r + 1);
    for (unsigned r = 0; r <= max_r; ++r) {
      for (unsigned s = 0; s <= max_s; ++s) grid[r].push_back(table.at(r, s).den());
    }
    out << render_table(grid, g.format());
    return kExitOk;
  }
  RationalGrid grid(max_r + 1);
  for (unsigned r = 0; r <= max_r; ++r) {
    for (unsigned s = 0; s <= max_s; ++s) grid[r].push_back(table.at(r, s));
  }
  out << render_table(grid, g.format());
  return kExitOk;
}

std::string index_set_text(const std::vector<unsigned>& indices) {
  if (indices.empty()) return "{}";
  std::string text = "{\xCE\xBD=";  // U+03BD
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) text += ",";
    text += std::to_string(indices[i]);
  }
  return text + "}";
}

int cmd_psi(const Globals& g, unsigned r, unsigned s, unsigned p, bool show_indices,
            std::ostream& out) {
  const PsiValue v = psi(r, s, p);
  switch (g.format()) {
    case OutputFormat::json: {
      Json doc;
      doc["r"] = r;
      doc["s"] = s;
      doc["p"] = p;
      doc["value"] = int_to_json(v.value);
      if (show_indices) doc["indices"] = v.index_set;
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::latex:
      out << "$" << v.value << "$\n";
      break;
    case OutputFormat::csv:
      out << v.value;
      if (show_indices) {
        for (unsigned k : v.index_set) out << ',' << k;
      }
      out << '\n';
      break;
    case OutputFormat::plain:
      out << v.value;
      if (show_indices) out << "  " << index_set_text(v.index_set);
      out << '\n';
      break;
  }
  return kExitOk;
}

int cmd_denom(const Globals& g, unsigned r, unsigned s, bool factors, std::ostream& out,
              std::ostream& err) {
  const auto cache = cache_for(r, s);
  const Int exact = denom_exact(cache, r, s);
  const DenomFactorization f = denom_formula(r, s);
  if (f.value != exact) {
    err << "falsified: closed formula gives " << f.value << " but denom(B(" << r << "," << s
        << ")) = " << exact << '\n';
    return kExitFalsified;
  }
  switch (g.format()) {
    case OutputFormat::json: {
      Json doc;
      doc["r"] = r;
      doc["s"] = s;
      doc["value"] = int_to_json(f.value);
      doc["eps2"] = f.eps2;
      doc["primes"] = f.primes;
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::latex:
      out << "$" << f.value << "$\n";
      break;
    default:
      out << f.value;
      if (factors) out << " = " << f.to_string();
      out << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Globals& g, const std::string& property, SweepOptions options,
               std::ostream& out, std::ostream& err) {
  const auto names = property_names();
  if (std::find(names.begin(), names.end(), property) == names.end()) {
    err << "unknown property '" << property << "'; valid properties:";
    for (auto name : names) err << ' ' << name;
    err << '\n';
    return kExitUsage;
  }
  options.jobs = g.jobs;
  const VerifyReport report = run_sweep(property, options);
  out << render_report(report, g.format());
  return report.ok() ? kExitOk : kExitFalsified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact umbral Bernoulli numbers B_{r,s}, their denominators and Psi sums"};
  app.name("umbral");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format_name, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json", "latex"}));
  app.add_option("--jobs", g.jobs, "Worker threads for verify sweeps")->check(CLI::Range(1U, 1024U));

  unsigned r = 0, s = 0, p = 0;
  bool flag_poly = false, flag_denoms = false, flag_indices = false, flag_factors = false;

  auto* value = app.add_subcommand("value", "Print B_{r,s}");
  value->add_option("r", r)->required();
  value->add_option("s", s)->required();
  value->add_flag("--poly", flag_poly, "Print the polynomial B_{r,s}(x), coefficients low-to-high");

  unsigned max_r = 0, max_s = 0;
  auto* table = app.add_subcommand("table", "Print B_{r,s} for 0 <= r <= max_r, 0 <= s <= max_s");
  table->add_option("max_r", max_r)->required();
  table->add_option("max_s", max_s)->required();
  table->add_flag("--denoms", flag_denoms, "Print denominators instead of values");

  auto* psi_cmd = app.add_subcommand("psi", "Print Psi_{r,s}(p)");
  psi_cmd->add_option("r", r)->required();
  psi_cmd->add_option("s", s)->required();
  psi_cmd->add_option("p", p)->required();
  psi_cmd->add_flag("--show-indices", flag_indices, "Also print the contributing indices");

  auto* denom = app.add_subcommand("denom", "Print the denominator of B_{r,s}");
  denom->add_option("r", r)->required();
  denom->add_option("s", s)->required();
  denom->add_flag("--factors", flag_factors, "Also print the prime factorization");

  std::string property;
  SweepOptions sweep;
  unsigned max_p = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_option("property", property)->required();
  verify->add_option("--max-r", sweep.max_r, "Largest rank (default 20)");
  verify->add_option("--max-s", sweep.max_s, "Largest shift (default 20)");
  auto* max_p_opt = verify->add_option("--max-p", max_p, "Prime bound for Psi sweeps");

  std::vector<const char*> argv{"umbral"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*value) return cmd_value(g, r, s, flag_poly, out);
    if (*table) return cmd_table(g, max_r, max_s, flag_denoms, out);
    if (*psi_cmd) return cmd_psi(g, r, s, p, flag_indices, out);
    if (*denom) return cmd_denom(g, r, s, flag_factors, out, err);
    if (*verify) {
      if (*max_p_opt) sweep.max_p = max_p;
      return cmd_verify(g, property, sweep, out, err);
    }
  } catch (const InvariantViolation& e) {
    err << "falsified: " << e.what() << '\n';
    return kExitFalsified;
  } catch (const std::logic_error& e) {
    // DomainError and RangeError: the request itself is invalid.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace umbral::cli
