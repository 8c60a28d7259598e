#include "ljfix/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ljfix/cascade.hpp"
#include "ljfix/constants.hpp"
#include "ljfix/potential.hpp"
#include "ljfix/recursion.hpp"

namespace ljfix {

namespace {

CheckResult near(std::string name, double expected, double computed, double tolerance) {
  const double err = std::abs(computed - expected);
  return {std::move(name), expected, computed, err, tolerance, Relation::near, err <= tolerance};
}

CheckResult less_than(std::string name, double bound, double computed) {
  return {std::move(name), bound, computed, std::abs(computed - bound), 0.0, Relation::less_than,
          computed < bound};
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

// Direct 12-6 form, independent of the chi-based evaluation path.
double lj_direct(double sigma, double eps, double q) {
  const double x = sigma / q;
  return 4.0 * eps * (std::pow(x, 12) - std::pow(x, 6));
}

// Bisection for U(q) = u_c on a monotone bracket; stops at width 1e-14 sigma.
double bisect_level(double sigma, double eps, double u_c, double lo, double hi) {
  double g_lo = lj_direct(sigma, eps, lo) - u_c;
  while (hi - lo > 1e-14 * sigma) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = lj_direct(sigma, eps, mid) - u_c;
    if ((g_mid > 0.0) == (g_lo > 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<NamedValue> ledger_entries(double sigma1, double eps1) {
  const auto bc = bifurcation_constants();
  const auto ledger = energy_ledger(eps1);
  const auto shifted = self_similar_points();
  const auto deep = tangent_intersection();
  const auto levels = build_cascade(sigma1, eps1, 8);
  return {
      {"chi_plus", bc.chi_plus},
      {"chi_minus", bc.chi_minus},
      {"chi_sum", bc.chi_plus + bc.chi_minus},
      {"u_c_star", ledger.u_c_star},
      {"deep_attractive", ledger.deep_attractive},
      {"qiee", ledger.qiee},
      {"e_c", ledger.e_c},
      {"k_t_c", ledger.k_t_c},
      {"self_similar_chi_shifted_minus", shifted[0].chi},
      {"self_similar_chi_shifted_plus", shifted[1].chi},
      {"self_similar_f_shifted", shifted[1].f},
      {"tangent_intersection_chi", deep.chi},
      {"tangent_intersection_f", deep.f},
      {"lindemann_ratio", lindemann_ratio()},
      {"order_count", static_cast<double>(order_count(sigma1))},
      {"q_8R", levels.back().q_right},
  };
}

std::vector<CheckResult> run_verification() {
  using namespace exact;
  std::vector<CheckResult> out;

  // Fixed point and sum rule.
  out.push_back(near("f(3/8)", to_double<FixedPoint>(), f_reduced(0.375), 1e-15));
  out.push_back(near("f(5/8)", to_double<FixedPoint>(), f_reduced(0.625), 1e-15));
  {
    const auto bc = bifurcation_constants();
    out.push_back(near("f(chi_plus+chi_minus)", 0.0, f_reduced(bc.chi_plus + bc.chi_minus), 0.0));
  }

  // Stability interval: scan chi = i/N against integer comparisons 8i vs 3N, 5N.
  {
    constexpr long n = 100000;
    long mismatches = 0;
    double lower = 2.0;
    double upper = -1.0;
    for (long i = 0; i <= n; ++i) {
      const double chi = static_cast<double>(i) / static_cast<double>(n);
      const auto report = stability_at(chi);
      const long scaled = 8 * i;
      const Stability want = (scaled == 3 * n || scaled == 5 * n) ? Stability::marginal
                             : (scaled > 3 * n && scaled < 5 * n) ? Stability::contracting
                                                                  : Stability::expanding;
      if (report.classification != want) ++mismatches;
      if (report.s <= 1.0) {
        lower = std::min(lower, chi);
        upper = std::max(upper, chi);
      }
    }
    out.push_back(near("stability_lower_edge", to_double<ChiPlus>(), lower, 0.0));
    out.push_back(near("stability_upper_edge", to_double<ChiMinus>(), upper, 0.0));
    out.push_back(near("stability_scan_mismatches", 0.0, static_cast<double>(mismatches), 0.0));
  }

  // Shifted-frame self-similar condition.
  {
    const auto pts = self_similar_points();
    out.push_back(near("self_similar_chi'_minus", -to_double<Qiee>(), pts[0].chi, 1e-12));
    out.push_back(near("self_similar_chi'_plus", to_double<Qiee>(), pts[1].chi, 1e-12));
    out.push_back(near("self_similar_f'", to_double<Qiee>(), pts[1].f, 1e-12));
    const double residual = std::max(std::abs(self_similar_residual(pts[0].chi)),
                                     std::abs(self_similar_residual(pts[1].chi)));
    out.push_back(near("self_similar_residual", 0.0, residual, 1e-12));
    const auto back_minus = from_shifted_frame(pts[0]);
    const auto back_plus = from_shifted_frame(pts[1]);
    out.push_back(near("self_similar_chi_plus", to_double<ChiPlus>(), back_minus.chi, 1e-12));
    out.push_back(near("self_similar_chi_minus", to_double<ChiMinus>(), back_plus.chi, 1e-12));
    out.push_back(near("self_similar_f_at_chi_plus", to_double<FixedPoint>(), back_minus.f, 1e-12));
    out.push_back(near("self_similar_f_at_chi_minus", to_double<FixedPoint>(), back_plus.f, 1e-12));
  }

  // Deep attractive point and reflection about the well bottom.
  {
    const auto deep = tangent_intersection();
    out.push_back(near("tangent_intersection_chi", to_double<ChiWell>(), deep.chi, 1e-12));
    out.push_back(near("tangent_intersection_f", to_double<DeepPoint>(), deep.f, 1e-12));
    using Upper = std::ratio_subtract<FixedPoint, WellBottom>;
    using Lower = std::ratio_subtract<WellBottom, DeepPoint>;
    out.push_back(near("reflection_gap_fixed_point", 1.0 / 16.0, to_double<Upper>(), 0.0));
    out.push_back(near("reflection_gap_deep_point", 1.0 / 16.0, to_double<Lower>(), 0.0));
  }

  // QIEE ledger, exact rationals.
  {
    using EnergyGap = std::ratio_subtract<ShiftF, std::ratio<15, 16>>;
    using LowGap = std::ratio_subtract<ChiWell, ChiPlus>;
    using HighGap = std::ratio_subtract<ChiMinus, ChiWell>;
    out.push_back(near("qiee_17/16-15/16", to_double<Qiee>(), to_double<EnergyGap>(), 0.0));
    out.push_back(near("qiee_1/2-3/8", to_double<Qiee>(), to_double<LowGap>(), 0.0));
    out.push_back(near("qiee_5/8-1/2", to_double<Qiee>(), to_double<HighGap>(), 0.0));
  }

  // Cascade: Lindemann ratio, order count, sharp angles, oracles.
  const auto levels = build_cascade(1.0, 1.0, 8);
  {
    const double dl = lindemann_ratio();
    out.push_back(near("lindemann_vs_0.1047", 0.1047, dl, 2e-4));
    double spread = 0.0;
    for (const auto& l : levels) {
      if (l.lindemann) spread = std::max(spread, std::abs(*l.lindemann - dl));
    }
    out.push_back(near("lindemann_per_level_spread", 0.0, spread, 1e-12));
  }
  {
    std::mt19937_64 rng(20061016);
    std::uniform_real_distribution<double> sigma_dist(0.1, 100.0);
    int m_min = 1 << 20;
    int m_max = 0;
    for (int k = 0; k < 100; ++k) {
      const int m = order_count(sigma_dist(rng));
      m_min = std::min(m_min, m);
      m_max = std::max(m_max, m);
    }
    out.push_back(near("order_count_min", 8.0, m_min, 0.0));
    out.push_back(near("order_count_max", 8.0, m_max, 0.0));
    out.push_back(near("q_8R/sigma1", 2.137, levels[7].q_right, 1e-3));
    out.push_back(less_than("q_7R/sigma1", 2.0, levels[6].q_right));
  }
  {
    const double target = to_double<FixedPoint>();
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
      const double q = levels[i].q_right;
      worst = std::max(worst, rel_diff(evaluate(levels[i].spec, q), target));
      worst = std::max(worst, rel_diff(evaluate(levels[i + 1].spec, q), target));
    }
    out.push_back(near("sharp_angle_residual", 0.0, worst, 1e-12));
  }
  {
    const PotentialSpec unit(1.0, 1.0);
    const double q0 = unit.minimum_radius();
    std::mt19937_64 rng(1977);
    std::uniform_real_distribution<double> level_dist(-0.999, -0.001);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const double u_c = level_dist(rng);
      const auto pair = crossings(unit, u_c);
      worst = std::max(worst, rel_diff(pair.q_left, bisect_level(1.0, 1.0, u_c, 1e-3, q0)));
      worst = std::max(worst, rel_diff(pair.q_right, bisect_level(1.0, 1.0, u_c, q0, 1e3)));
    }
    out.push_back(near("crossings_vs_bisection", 0.0, worst, 1e-10));

    double cascade_worst = 0.0;
    for (const auto& l : levels) {
      const auto pair = crossings(l.spec, to_double<FixedPoint>() * l.spec.epsilon());
      cascade_worst = std::max(cascade_worst, rel_diff(pair.q_left, l.q_left));
      cascade_worst = std::max(cascade_worst, rel_diff(pair.q_right, l.q_right));
    }
    out.push_back(near("cascade_vs_crossings", 0.0, cascade_worst, 1e-10));
  }

  // Recursion identities.
  {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> chi_dist(0.0, 1.0);
    std::uniform_real_distribution<double> delta_dist(-0.1, 0.1);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const double chi = chi_dist(rng);
      const double d = delta_dist(rng);
      worst = std::max(worst, std::abs(step_exact(chi, d) - step_linear(chi, d) - 4.0 * d * d));
    }
    out.push_back(near("quadratic_remainder", 0.0, worst, 1e-14));

    constexpr double d0 = 0.01;
    const auto flip = iterate(to_double<ChiPlus>(), d0, 100, StepMode::linearized);
    const auto keep = iterate(to_double<ChiMinus>(), d0, 100, StepMode::linearized);
    double flip_dev = flip.steps.size() == 101 ? 0.0 : 1.0;
    double keep_dev = keep.steps.size() == 101 ? 0.0 : 1.0;
    for (const auto& s : flip.steps) {
      const double want = (s.index % 2 == 0) ? d0 : -d0;
      flip_dev = std::max(flip_dev, std::abs(s.delta - want) / d0);
    }
    for (const auto& s : keep.steps) keep_dev = std::max(keep_dev, std::abs(s.delta - d0) / d0);
    out.push_back(near("marginal_flip_at_3/8", 0.0, flip_dev, 1e-12));
    out.push_back(near("marginal_keep_at_5/8", 0.0, keep_dev, 1e-12));
  }

  return out;
}

}  // namespace ljfix
