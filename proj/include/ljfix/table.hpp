#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ljfix/cascade.hpp"
#include "ljfix/potential.hpp"
#include "ljfix/profile.hpp"
#include "ljfix/recursion.hpp"
#include "ljfix/verify.hpp"

namespace ljfix {

enum class Format { csv, json };

/// An empty cell serializes as an empty CSV field or JSON null.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Decimal, 17 significant digits, locale independent.
std::string format_number(double value);

/// CSV: header line then one line per row, '\n' terminated.
/// JSON: array of flat objects keyed by column name.
/// Throws ArgumentError for a table without rows.
std::string serialize(const Table& table, Format format);

Table to_table(std::span<const ProfileRow> rows);
Table to_table(std::span<const PathPoint> points);
Table to_table(std::span<const RecursionFigureRow> rows);
Table to_table(std::span<const CascadeLevel> levels);
Table to_table(std::span<const CascadeLevel> levels, const std::vector<bool>& vacancy);
Table to_table(const FluctuationTrajectory& trajectory);
Table to_table(const CrossingPair& pair, const PotentialSpec& spec);
Table to_table(const StabilityReport& report);
Table to_table(std::span<const NamedValue> entries);
Table to_table(std::span<const CheckResult> checks);

template <class Rows>
std::string serialize(const Rows& rows, Format format) {
  return serialize(to_table(std::span{rows}), format);
}

}  // namespace ljfix
