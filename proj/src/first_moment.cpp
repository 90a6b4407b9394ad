#include <mcb/first_moment.hpp>

#include <mcb/errors.hpp>
#include <mcb/gauss_kernels.hpp>

#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>

namespace mcb {

namespace {

constexpr double kNominalLo = 0.37613;
constexpr double kNominalHi = 0.58870;
constexpr double kHardLo = 0.3;
constexpr double kHardHi = 0.7;

const double kSqrtPi = std::sqrt(std::numbers::pi);

void check_x(double x) {
  if (!std::isfinite(x) || x < kHardLo || x > kHardHi) {
    std::ostringstream msg;
    msg << "x = " << x << " outside the accepted range [" << kHardLo << ", " << kHardHi << "]";
    throw domain_error(msg.str());
  }
  if (x < kNominalLo || x > kNominalHi) {
    std::cerr << "mcb: warning: x = " << x << " outside the nominal range ["
              << kNominalLo << ", " << kNominalHi << "]\n";
  }
}

// exp(-v^2) / (sqrt(pi) (1 + erf(v))): half the slope of log(1 + erf(v)),
// written through log(erfc(-v)) so large |v| cannot underflow prematurely.
double erf_log_half_slope(double v) {
  return std::exp(-v * v - ln_erf1p(v)) / kSqrtPi;
}

}  // namespace

double theta_residual(double x, double theta) {
  return theta + erf_log_half_slope(2.0 * x + theta);
}

FirstMomentSolution solve_theta(double x, double tol) {
  check_x(x);
  if (!(tol > 0.0)) throw domain_error("solve_theta tolerance must be positive");

  double lo = -x;
  double hi = 0.0;
  const double rlo = theta_residual(x, lo);
  const double rhi = theta_residual(x, hi);
  // The residual is strictly increasing in theta; the root needs a sign
  // change over (-x, 0), which fails for small x (root would sit below -x).
  if (!(rlo < 0.0)) {
    std::ostringstream msg;
    msg << "no tilt bracket at x = " << x << ": residual(" << lo << ") = " << rlo << " >= 0";
    throw bracket_error(msg.str());
  }
  if (!(rhi > 0.0)) {
    std::ostringstream msg;
    msg << "no tilt bracket at x = " << x << ": residual(0) = " << rhi << " <= 0";
    throw bracket_error(msg.str());
  }

  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (theta_residual(x, mid) >= 0.0)
      hi = mid;
    else
      lo = mid;
    if (hi - lo <= 1e-16 * std::max(1.0, -lo)) break;
  }

  FirstMomentSolution sol;
  sol.x = x;
  sol.theta = 0.5 * (lo + hi);
  sol.residual = theta_residual(x, sol.theta);
  if (!(std::abs(sol.residual) <= tol)) {
    std::ostringstream msg;
    msg << "tilt bisection stalled at |residual| = " << std::abs(sol.residual)
        << " > tol = " << tol << " (x = " << x << ")";
    throw convergence_error(msg.str());
  }
  const double v = 2.0 * x + sol.theta;
  sol.w = -2.0 * x * x + sol.theta * sol.theta + ln_erf1p(v);
  return sol;
}

double w_value(double x, double tol) { return solve_theta(x, tol).w; }

std::pair<double, double> solve_xu(double tol) {
  if (!(tol > 0.0)) throw domain_error("solve_xu tolerance must be positive");
  double lo = kNominalLo;
  double hi = kNominalHi;
  const double wlo = w_value(lo);
  const double whi = w_value(hi);
  if (!(wlo > 0.0) || !(whi < 0.0)) {
    std::ostringstream msg;
    msg << "exponent root bracket failed: w(" << lo << ") = " << wlo
        << ", w(" << hi << ") = " << whi;
    throw bracket_error(msg.str());
  }
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (w_value(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double x = 0.5 * (lo + hi);
  return {x, solve_theta(x).theta};
}

}  // namespace mcb
