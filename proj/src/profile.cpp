#include "ljfix/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ljfix/constants.hpp"
#include "ljfix/error.hpp"

namespace ljfix {

namespace {

void require_levels(std::span<const CascadeLevel> levels) {
  if (levels.empty()) throw ArgumentError("at least one cascade level is required");
}

// Uniform grid point k of n over [lo, hi]; the last point is hi exactly.
double grid_point(double lo, double hi, int k, int n) {
  if (k == n - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
}

}  // namespace

ProfileRow profile_row(std::span<const CascadeLevel> levels, double q) {
  require_levels(levels);
  ProfileRow row;
  row.q = q;
  row.per_order_u.reserve(levels.size());
  for (const auto& level : levels) row.per_order_u.push_back(evaluate(level.spec, q));
  row.envelope = *std::min_element(row.per_order_u.begin(), row.per_order_u.end());
  return row;
}

std::vector<ProfileRow> sample_family(std::span<const CascadeLevel> levels, double q_min,
                                      double q_max, int n_samples) {
  require_levels(levels);
  if (!(q_min > 0.0) || !(q_min < q_max) || !std::isfinite(q_max)) {
    std::ostringstream msg;
    msg << "need 0 < q_min < q_max, got [" << q_min << ", " << q_max << "]";
    throw ArgumentError(msg.str());
  }
  if (n_samples < 2) {
    throw ArgumentError("n_samples must be at least 2, got " + std::to_string(n_samples));
  }
  std::vector<ProfileRow> rows;
  rows.reserve(static_cast<std::size_t>(n_samples));
  for (int k = 0; k < n_samples; ++k) {
    rows.push_back(profile_row(levels, grid_point(q_min, q_max, k, n_samples)));
  }
  return rows;
}

std::vector<PathPoint> delocalization_path(std::span<const CascadeLevel> levels, double eps1) {
  require_levels(levels);
  if (!(eps1 > 0.0)) throw ArgumentError("eps1 must be positive");
  std::vector<PathPoint> path;
  path.reserve(levels.size() + 1);
  const auto& first = levels.front();
  path.push_back({"q1L", first.q_left, evaluate(first.spec, first.q_left)});
  for (const auto& level : levels) {
    path.push_back({"q" + std::to_string(level.order) + "R", level.q_right,
                    evaluate(level.spec, level.q_right)});
  }
  return path;
}

std::optional<double> tent(double chi) noexcept {
  using namespace exact;
  constexpr double lo = to_double<ChiPlus>();
  constexpr double mid = to_double<ChiWell>();
  constexpr double hi = to_double<ChiMinus>();
  if (chi < lo || chi > hi) return std::nullopt;
  if (chi <= mid) return to_double<FixedPoint>() - (chi - lo);
  return to_double<DeepPoint>() + (chi - mid);
}

std::vector<RecursionFigureRow> recursion_figure(double delta0, int n_samples) {
  if (!(delta0 > 0.0 && delta0 < exact::to_double<exact::Qiee>())) {
    std::ostringstream msg;
    msg << "delta0 must lie in (0, 0.125), got " << delta0;
    throw ArgumentError(msg.str());
  }
  if (n_samples < 2) {
    throw ArgumentError("n_samples must be at least 2, got " + std::to_string(n_samples));
  }
  const double lo = exact::to_double<exact::ChiPlus>() - delta0;
  const double hi = exact::to_double<exact::ChiMinus>() + delta0;
  std::vector<RecursionFigureRow> rows;
  rows.reserve(static_cast<std::size_t>(n_samples));
  for (int k = 0; k < n_samples; ++k) {
    const double chi = grid_point(lo, hi, k, n_samples);
    rows.push_back({chi, f_reduced(chi), tent(chi)});
  }
  return rows;
}

}  // namespace ljfix
