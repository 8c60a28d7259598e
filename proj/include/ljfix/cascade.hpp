#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ljfix/potential.hpp"

namespace ljfix {

inline constexpr int kMaxOrders = 64;

/// One order of the self-similar hierarchy. Consecutive orders share a
/// sharp-angled point: q_right of order i is q_left of order i + 1, and both
/// curves pass through the fixed-point level there.
struct CascadeLevel {
  int order = 1;
  PotentialSpec spec{1.0, 1.0};  // sigma_i and the well depth used for order i
  double q_left = 0.0;
  double q_right = 0.0;
  std::optional<double> gap_prev;   // q_{i,R} - q_{i-1,R}; absent for order 1
  std::optional<double> lindemann;  // gap_prev / sigma_{i-1}; absent for order 1

  double sigma() const noexcept { return spec.sigma(); }
};

/// Energies in absolute units (multiples of eps1).
struct EnergyLedger {
  double u_c_star = 0.0;
  double qiee = 0.0;
  double deep_attractive = 0.0;
  double e_c = 0.0;
  double k_t_c = 0.0;
};

/// sigma_i = sigma1 (5/3)^((i-1)/6), q_{i,R} = sigma_i (8/3)^(1/6),
/// q_{i,L} = sigma_i (8/5)^(1/6). Every order uses well depth eps1.
/// Throws ArgumentError unless sigma1 > 0, eps1 > 0, 1 <= max_orders <= 64.
std::vector<CascadeLevel> build_cascade(double sigma1, double eps1, int max_orders);

/// (8/3)^(1/6) [(5/3)^(1/6) - 1] = 0.10464892...
double lindemann_ratio() noexcept;

/// Smallest order i with q_{i,R} > 2 sigma1. Always 8.
int order_count(double sigma1);

/// true at level i iff q_{i,R} > 2 sigma1, i.e. a sigma1-sized vacancy fits
/// between two sigma1 clusters.
std::vector<bool> vacancy_check(std::span<const CascadeLevel> levels, double sigma1);

EnergyLedger energy_ledger(double eps1);

}  // namespace ljfix
