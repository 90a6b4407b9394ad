#include <mcb/gauss_kernels.hpp>

#include <gsl/gsl_sf_erf.h>

#include <cmath>
#include <numbers>
#include <sstream>

namespace mcb {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
const double kLnSqrtPiOver2 = 0.5 * std::log(std::numbers::pi / 2.0);
const double kLnPi = std::log(std::numbers::pi);

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg << name << " must be finite, got " << v;
    throw domain_error(msg.str());
  }
}

void validate(const WedgeParams& p) {
  require_finite(p.theta, "theta");
  require_finite(p.a1, "a1");
  require_finite(p.a2, "a2");
  if (p.a1 < 0.0) throw domain_error("wedge slope a1 must be nonnegative");
}

}  // namespace

ErfPair erf_family(double u) {
  require_finite(u, "erf argument");
  return {std::erf(u), gsl_sf_log_erfc(u)};
}

double ln_erf1p(double v) { return gsl_sf_log_erfc(-v); }

LogValue q_integral(const WedgeParams& p, const QuadSpec& q) {
  validate(p);
  validate(q);
  const double s = p.theta + p.a2;
  // Log of the integrand at z = 0, its maximum over [0, inf).
  const double shift = gsl_sf_log_erfc(-s / kSqrt2);
  auto g = [&](double z) {
    return std::exp(-0.5 * z * z + gsl_sf_log_erfc((p.a1 * z - s) / kSqrt2) - shift);
  };
  const QuadResult r = integrate(g, 0.0, q.truncation, q);
  LogValue out;
  out.ln_value = kLnSqrtPiOver2 + shift + std::log(r.value);
  out.value = std::exp(out.ln_value);
  return out;
}

LogValue p_value(const WedgeParams& p, const QuadSpec& q) {
  const LogValue lq = q_integral(p, q);
  LogValue out;
  out.ln_value = 0.5 * p.theta * p.theta - kLnPi + lq.ln_value;
  out.value = std::exp(out.ln_value);
  return out;
}

double half_gaussian_cross(const WedgeParams& p) {
  validate(p);
  const double s = p.theta + p.a2;
  const double d = 1.0 + p.a1 * p.a1;
  const double arg = p.a1 * s / std::sqrt(2.0 * d);
  return std::sqrt(std::numbers::pi / (2.0 * d)) * std::exp(-s * s / (2.0 * d)) *
         (1.0 + std::erf(arg));
}

double ln_half_gaussian_cross(const WedgeParams& p) {
  validate(p);
  const double s = p.theta + p.a2;
  const double d = 1.0 + p.a1 * p.a1;
  const double arg = p.a1 * s / std::sqrt(2.0 * d);
  return 0.5 * std::log(std::numbers::pi / (2.0 * d)) - s * s / (2.0 * d) + ln_erf1p(arg);
}

double wedge_probability(double b1, double b2, double b3, const QuadSpec& q) {
  require_finite(b1, "b1");
  require_finite(b2, "b2");
  require_finite(b3, "b3");
  if (b2 < 0.0) throw domain_error("wedge_probability requires b2 >= 0");
  validate(q);

  // P(Z1 >= b2 |Z2 + b1| - b3) = E[ erfc((b2 |Z2 + b1| - b3)/sqrt 2) / 2 ].
  // Substituting u = |z2 + b1| folds both branches onto u >= 0.
  const double inv_sqrt2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  auto f = [&](double u) {
    const double du1 = u - b1;
    const double du2 = u + b1;
    const double density =
        inv_sqrt2pi * (std::exp(-0.5 * du1 * du1) + std::exp(-0.5 * du2 * du2));
    return density * 0.5 * std::erfc((b2 * u - b3) / kSqrt2);
  };
  const double hi = q.truncation + std::abs(b1);
  return integrate(f, 0.0, hi, q).value;
}

}  // namespace mcb
