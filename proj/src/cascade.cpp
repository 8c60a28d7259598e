#include "ljfix/cascade.hpp"

#include <cmath>
#include <sstream>

#include "ljfix/constants.hpp"
#include "ljfix/error.hpp"

namespace ljfix {

namespace {

const double kSizeRatio = std::pow(5.0 / 3.0, 1.0 / 6.0);   // sigma_{i+1} / sigma_i
const double kRightFactor = std::pow(8.0 / 3.0, 1.0 / 6.0); // q_{i,R} / sigma_i, chi = 3/8
const double kLeftFactor = std::pow(8.0 / 5.0, 1.0 / 6.0);  // q_{i,L} / sigma_i, chi = 5/8

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << name << " must be positive and finite, got " << v;
    throw ArgumentError(msg.str());
  }
}

double order_sigma(double sigma1, int order) {
  return sigma1 * std::pow(5.0 / 3.0, (order - 1) / 6.0);
}

}  // namespace

std::vector<CascadeLevel> build_cascade(double sigma1, double eps1, int max_orders) {
  require_positive(sigma1, "sigma1");
  require_positive(eps1, "eps1");
  if (max_orders < 1 || max_orders > kMaxOrders) {
    std::ostringstream msg;
    msg << "max_orders must be in [1, " << kMaxOrders << "], got " << max_orders;
    throw ArgumentError(msg.str());
  }

  std::vector<CascadeLevel> levels;
  levels.reserve(static_cast<std::size_t>(max_orders));
  for (int i = 1; i <= max_orders; ++i) {
    const double sigma = order_sigma(sigma1, i);
    CascadeLevel level{i, PotentialSpec(sigma, eps1), sigma * kLeftFactor, sigma * kRightFactor,
                       std::nullopt, std::nullopt};
    if (i > 1) {
      const CascadeLevel& prev = levels.back();
      level.gap_prev = level.q_right - prev.q_right;
      level.lindemann = *level.gap_prev / prev.sigma();
    }
    levels.push_back(level);
  }
  return levels;
}

double lindemann_ratio() noexcept { return kRightFactor * (kSizeRatio - 1.0); }

int order_count(double sigma1) {
  require_positive(sigma1, "sigma1");
  for (int i = 1; i <= kMaxOrders; ++i) {
    if (order_sigma(sigma1, i) * kRightFactor > 2.0 * sigma1) return i;
  }
  return kMaxOrders + 1;  // unreachable: q_{i,R} grows geometrically
}

std::vector<bool> vacancy_check(std::span<const CascadeLevel> levels, double sigma1) {
  require_positive(sigma1, "sigma1");
  if (levels.empty()) throw ArgumentError("vacancy_check needs at least one level");
  std::vector<bool> fits;
  fits.reserve(levels.size());
  for (const auto& level : levels) fits.push_back(level.q_right > 2.0 * sigma1);
  return fits;
}

EnergyLedger energy_ledger(double eps1) {
  require_positive(eps1, "eps1");
  using namespace exact;
  return {to_double<FixedPoint>() * eps1, to_double<Qiee>() * eps1, to_double<DeepPoint>() * eps1,
          to_double<LocalizedEnergy>() * eps1, to_double<CriticalEnergy>() * eps1};
}

}  // namespace ljfix
