#pragma once

#include "umbral/denom_theory.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace umbral::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { plain, csv, json, latex };

std::optional<OutputFormat> parse_format(std::string_view name);
std::string_view format_name(OutputFormat format);

// JSON encoding of exact values. Integers with |v| <= 2^53 are JSON numbers;
// anything larger is a decimal string so that double-based consumers do not
// round it. Rationals are {"num": ..., "den": ...} in that order.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// "$-\frac{1}{2}$", "$0$".
std::string latex_rational(const Rational& q);

using RationalGrid = std::vector<std::vector<Rational>>;
using IntGrid = std::vector<std::vector<Int>>;

/// plain: rows of ", "-separated cells; csv: one comma-separated row per
/// line; json: {"kind": "bs", "rows": [[{num, den}, ...], ...]};
/// latex: tabular body with a header row of shift indices.
std::string render_table(const RationalGrid& grid, OutputFormat format);
/// Same layouts for integer grids; json kind is "denominator" and cells are
/// plain integers.
std::string render_table(const IntGrid& grid, OutputFormat format);

/// Parses a json table produced by render_table and renders it again.
/// Identical output is the round-trip contract.
std::string rerender_json_table(std::string_view text);

/// Polynomial coefficients low-to-high.
std::string render_poly(const Poly& p, OutputFormat format);

}  // namespace umbral::cli
