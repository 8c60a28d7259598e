#include "ljfix/potential.hpp"

#include <cmath>
#include <sstream>

#include "ljfix/error.hpp"

namespace ljfix {

namespace {

void require_positive_radius(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    std::ostringstream msg;
    msg << "radius q must be positive and finite, got " << q;
    throw DomainError(msg.str());
  }
}

}  // namespace

PotentialSpec::PotentialSpec(double sigma, double epsilon) : sigma_(sigma), epsilon_(epsilon) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    std::ostringstream msg;
    msg << "sigma must be positive and finite, got " << sigma;
    throw ArgumentError(msg.str());
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    std::ostringstream msg;
    msg << "epsilon must be positive and finite, got " << epsilon;
    throw ArgumentError(msg.str());
  }
}

double PotentialSpec::minimum_radius() const noexcept { return sigma_ * std::pow(2.0, 1.0 / 6.0); }

double chi_of(const PotentialSpec& spec, double q) {
  require_positive_radius(q);
  const double r = spec.sigma() / q;
  const double r2 = r * r;
  return r2 * r2 * r2;
}

double q_of_chi(const PotentialSpec& spec, double chi) {
  if (!(chi > 0.0) || !std::isfinite(chi)) {
    std::ostringstream msg;
    msg << "chi must be positive and finite, got " << chi;
    throw DomainError(msg.str());
  }
  return spec.sigma() * std::pow(chi, -1.0 / 6.0);
}

double evaluate(const PotentialSpec& spec, double q) {
  // 4 eps (chi^2 - chi) == eps f(chi)
  return spec.epsilon() * f_reduced(chi_of(spec, q));
}

CrossingPair crossings(const PotentialSpec& spec, double u_c) {
  const double eps = spec.epsilon();
  if (u_c == -eps || (u_c > -eps && u_c / eps <= -1.0)) {
    std::ostringstream msg;
    msg << "level u_c = " << u_c << " is the well bottom (double root at q = "
        << spec.minimum_radius() << "); choose u_c in the open interval (" << -eps << ", 0)";
    throw DegenerateLevelError(msg.str());
  }
  if (!(u_c > -eps && u_c < 0.0)) {
    std::ostringstream msg;
    msg << "level u_c = " << u_c << " outside the open interval (" << -eps << ", 0)";
    throw LevelOutOfRangeError(msg.str());
  }

  // f(chi) = u_c/eps  <=>  chi^2 - chi - u_c/(4 eps) = 0
  const double level = u_c / eps;
  const double root = std::sqrt(1.0 + level);
  const double chi_large = 0.5 * (1.0 + root);
  // product of roots is -level/4; avoids cancellation near u_c -> 0
  const double chi_small = (-0.25 * level) / chi_large;

  CrossingPair pair;
  pair.u_c = u_c;
  pair.q_left = q_of_chi(spec, chi_large);
  pair.q_right = q_of_chi(spec, chi_small);
  return pair;
}

}  // namespace ljfix
