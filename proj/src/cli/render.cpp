#include "umbral/cli/render.hpp"

#include <sstream>

namespace umbral::cli {

namespace {

// Largest magnitude every IEEE double consumer reads back exactly.
const Int& json_safe_limit() {
  static const Int limit = Int::pow2(53);
  return limit;
}

std::string cell_text(const Rational& q) { return q.to_string(); }
std::string cell_text(const Int& v) { return v.to_string(); }

std::string latex_cell(const Rational& q) { return latex_rational(q); }
std::string latex_cell(const Int& v) { return "$" + v.to_string() + "$"; }

Json json_cell(const Rational& q) { return rational_to_json(q); }
Json json_cell(const Int& v) { return int_to_json(v); }

template <class Cell>
std::string render_grid(const std::vector<std::vector<Cell>>& grid, OutputFormat format,
                        std::string_view kind) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::plain:
    case OutputFormat::csv: {
      const char* sep = format == OutputFormat::plain ? ", " : ",";
      for (const auto& row : grid) {
        for (std::size_t s = 0; s < row.size(); ++s) {
          if (s > 0) out << sep;
          out << cell_text(row[s]);
        }
        out << '\n';
      }
      break;
    }
    case OutputFormat::json: {
      Json rows = Json::array();
      for (const auto& row : grid) {
        Json cells = Json::array();
        for (const auto& cell : row) cells.push_back(json_cell(cell));
        rows.push_back(std::move(cells));
      }
      Json doc;
      doc["kind"] = kind;
      doc["rows"] = std::move(rows);
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::latex: {
      const std::size_t width = grid.empty() ? 0 : grid.front().size();
      out << "$r \\backslash s$";
      for (std::size_t s = 0; s < width; ++s) out << " & $" << s << "$";
      out << " \\\\\n\\hline\n";
      for (std::size_t r = 0; r < grid.size(); ++r) {
        out << "$" << r << "$";
        for (const auto& cell : grid[r]) out << " & " << latex_cell(cell);
        out << " \\\\\n";
      }
      break;
    }
  }
  return out.str();
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "latex") return OutputFormat::latex;
  return std::nullopt;
}

std::string_view format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::plain: return "plain";
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::latex: return "latex";
  }
  return "plain";
}

Json int_to_json(const Int& v) {
  if (v.abs() <= json_safe_limit()) return Json(v.to_int64());
  return Json(v.to_string());
}

Int int_from_json(const Json& j) {
  if (j.is_string()) return Int::from_string(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  throw DomainError("expected an integer or a decimal string in json, got " + j.dump());
}

Json rational_to_json(const Rational& q) {
  Json j;
  j["num"] = int_to_json(q.num());
  j["den"] = int_to_json(q.den());
  return j;
}

Rational rational_from_json(const Json& j) {
  return Rational(int_from_json(j.at("num")), int_from_json(j.at("den")));
}

std::string latex_rational(const Rational& q) {
  if (q.is_integer()) return "$" + q.num().to_string() + "$";
  std::string sign = q.sign() < 0 ? "-" : "";
  return "$" + sign + "\\frac{" + q.num().abs().to_string() + "}{" + q.den().to_string() + "}$";
}

std::string render_table(const RationalGrid& grid, OutputFormat format) {
  return render_grid(grid, format, "bs");
}

std::string render_table(const IntGrid& grid, OutputFormat format) {
  return render_grid(grid, format, "denominator");
}

std::string rerender_json_table(std::string_view text) {
  const Json doc = Json::parse(text);
  const auto kind = doc.at("kind").get<std::string>();
  if (kind == "bs") {
    RationalGrid grid;
    for (const auto& row : doc.at("rows")) {
      auto& out = grid.emplace_back();
      for (const auto& cell : row) out.push_back(rational_from_json(cell));
    }
    return render_table(grid, OutputFormat::json);
  }
  if (kind == "denominator") {
    IntGrid grid;
    for (const auto& row : doc.at("rows")) {
      auto& out = grid.emplace_back();
      for (const auto& cell : row) out.push_back(int_from_json(cell));
    }
    return render_table(grid, OutputFormat::json);
  }
  throw DomainError("unknown table kind '" + kind + "'");
}

std::string render_poly(const Poly& p, OutputFormat format) {
  const auto& c = p.coeffs();
  switch (format) {
    case OutputFormat::plain:
      return p.to_string() + "\n";
    case OutputFormat::csv: {
      std::string out;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k > 0) out += ",";
        out += c[k].to_string();
      }
      return out + "\n";
    }
    case OutputFormat::json: {
      Json coeffs = Json::array();
      for (const auto& q : c) coeffs.push_back(rational_to_json(q));
      Json doc;
      doc["coeffs"] = std::move(coeffs);
      return doc.dump() + "\n";
    }
    case OutputFormat::latex: {
      if (p.is_zero()) return "$0$\n";
      std::string out;
      for (std::size_t k = c.size(); k-- > 0;) {
        const Rational& q = c[k];
        if (q.is_zero()) continue;
        const bool negative = q.sign() < 0;
        if (out.empty()) {
          if (negative) out += "-";
        } else {
          out += negative ? " - " : " + ";
        }
        const Rational mag = negative ? -q : q;
        std::string body = latex_rational(mag);
        body = body.substr(1, body.size() - 2);  // strip the $...$
        if (k == 0 || mag != Rational(1)) out += body;
        if (k >= 1) out += "x";
        if (k >= 2) out += "^{" + std::to_string(k) + "}";
      }
      return "$" + out + "$\n";
    }
  }
  return {};
}

}  // namespace umbral::cli
