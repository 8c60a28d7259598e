#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ljfix/cascade.hpp"

// Figure data: the curve family and its lower envelope, the sharp-angled
// anchor polyline, and the tent path over the reduced parabola.

namespace ljfix {

struct ProfileRow {
  double q = 0.0;
  std::vector<double> per_order_u;  // one value per level, unclamped
  double envelope = 0.0;            // min of per_order_u
};

struct PathPoint {
  std::string label;  // "q1L", "q1R", ..., "qMR"
  double q = 0.0;
  double u = 0.0;
};

struct RecursionFigureRow {
  double chi = 0.0;
  double f_parabola = 0.0;
  std::optional<double> f_tent;  // absent outside [3/8, 5/8]
};

/// All curves evaluated at a single radius.
ProfileRow profile_row(std::span<const CascadeLevel> levels, double q);

/// Uniform grid over [q_min, q_max], endpoints included.
std::vector<ProfileRow> sample_family(std::span<const CascadeLevel> levels, double q_min,
                                      double q_max, int n_samples);

/// q_{1,L} followed by q_{i,R} for every level, each at its curve value.
std::vector<PathPoint> delocalization_path(std::span<const CascadeLevel> levels, double eps1);

/// Piecewise-linear tent through (3/8, -15/16), (1/2, -17/16), (5/8, -15/16).
std::optional<double> tent(double chi) noexcept;

/// Uniform grid over [3/8 - delta0, 5/8 + delta0]. Requires 0 < delta0 < 1/8.
std::vector<RecursionFigureRow> recursion_figure(double delta0, int n_samples);

}  // namespace ljfix
