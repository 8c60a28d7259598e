#include "ljfix/table.hpp"

#include <charconv>
#include <cstdio>
#include <cmath>
#include <system_error>

#include "ljfix/error.hpp"

namespace ljfix {

namespace {

Cell optional_cell(const std::optional<double>& v) {
  return v ? Cell{*v} : Cell{std::monostate{}};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

struct CsvCell {
  std::string operator()(std::monostate) const { return {}; }
  std::string operator()(double v) const { return format_number(v); }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(const std::string& v) const { return csv_escape(v); }
};

struct JsonCell {
  std::string operator()(std::monostate) const { return "null"; }
  std::string operator()(double v) const { return std::isfinite(v) ? format_number(v) : "null"; }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(const std::string& v) const { return json_escape(v); }
};

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";  // no "-0"
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  if (res.ec != std::errc{}) throw ArgumentError("number formatting failed");
  return std::string(buf, res.ptr);
}

std::string serialize(const Table& table, Format format) {
  if (table.rows.empty()) throw ArgumentError("cannot serialize an empty table");
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw ArgumentError("ragged table row");
  }

  std::string out;
  if (format == Format::csv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out += ',';
      out += csv_escape(table.columns[c]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += ',';
        out += std::visit(CsvCell{}, row[c]);
      }
      out += '\n';
    }
    return out;
  }

  out += "[\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out += "  {";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out += ", ";
      out += json_escape(table.columns[c]);
      out += ": ";
      out += std::visit(JsonCell{}, table.rows[r][c]);
    }
    out += r + 1 < table.rows.size() ? "},\n" : "}\n";
  }
  out += "]\n";
  return out;
}

Table to_table(std::span<const ProfileRow> rows) {
  Table t;
  const std::size_t orders = rows.empty() ? 0 : rows.front().per_order_u.size();
  t.columns.push_back("q");
  for (std::size_t i = 1; i <= orders; ++i) t.columns.push_back("u_" + std::to_string(i));
  t.columns.push_back("envelope");
  for (const auto& row : rows) {
    std::vector<Cell> cells{row.q};
    for (double u : row.per_order_u) cells.emplace_back(u);
    cells.emplace_back(row.envelope);
    t.rows.push_back(std::move(cells));
  }
  return t;
}

Table to_table(std::span<const PathPoint> points) {
  Table t{{"label", "q", "u"}, {}};
  for (const auto& p : points) t.rows.push_back({p.label, p.q, p.u});
  return t;
}

Table to_table(std::span<const RecursionFigureRow> rows) {
  Table t{{"chi", "f_parabola", "f_tent"}, {}};
  for (const auto& r : rows) t.rows.push_back({r.chi, r.f_parabola, optional_cell(r.f_tent)});
  return t;
}

Table to_table(std::span<const CascadeLevel> levels) {
  Table t{{"order", "sigma", "q_left", "q_right", "gap_prev", "lindemann"}, {}};
  for (const auto& l : levels) {
    t.rows.push_back({std::int64_t{l.order}, l.sigma(), l.q_left, l.q_right,
                      optional_cell(l.gap_prev), optional_cell(l.lindemann)});
  }
  return t;
}

Table to_table(std::span<const CascadeLevel> levels, const std::vector<bool>& vacancy) {
  if (vacancy.size() != levels.size()) throw ArgumentError("vacancy flags do not match levels");
  Table t = to_table(levels);
  t.columns.push_back("vacancy");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    t.rows[i].emplace_back(std::string(vacancy[i] ? "true" : "false"));
  }
  return t;
}

Table to_table(const FluctuationTrajectory& trajectory) {
  Table t{{"index", "delta", "f_value"}, {}};
  for (const auto& s : trajectory.steps) {
    t.rows.push_back({std::int64_t{s.index}, s.delta, s.f_value});
  }
  return t;
}

Table to_table(const CrossingPair& pair, const PotentialSpec& spec) {
  Table t{{"u_c", "chi_left", "chi_right", "q_left", "q_right"}, {}};
  t.rows.push_back({pair.u_c, chi_of(spec, pair.q_left), chi_of(spec, pair.q_right), pair.q_left,
                    pair.q_right});
  return t;
}

Table to_table(const StabilityReport& report) {
  Table t{{"chi", "f", "slope", "s", "classification"}, {}};
  t.rows.push_back({report.chi, f_reduced(report.chi), report.slope, report.s,
                    std::string(to_string(report.classification))});
  return t;
}

Table to_table(std::span<const NamedValue> entries) {
  Table t{{"name", "value"}, {}};
  for (const auto& e : entries) t.rows.push_back({e.name, e.value});
  return t;
}

Table to_table(std::span<const CheckResult> checks) {
  Table t{{"name", "relation", "expected", "computed", "abs_error", "tolerance", "status"}, {}};
  for (const auto& c : checks) {
    const char* rel = c.relation == Relation::near        ? "near"
                      : c.relation == Relation::less_than ? "less_than"
                                                          : "greater_than";
    t.rows.push_back({c.name, std::string(rel), c.expected, c.computed, c.abs_error, c.tolerance,
                      std::string(c.passed ? "pass" : "FAIL")});
  }
  return t;
}

}  // namespace ljfix
