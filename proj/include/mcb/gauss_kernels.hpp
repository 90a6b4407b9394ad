#pragma once

#include <mcb/quad.hpp>

namespace mcb {

// Parameters of the Gaussian wedge mass
//   Q(theta, a1, a2) = int_0^inf int_{a1 z2}^inf
//                        exp(-(z2^2 + (z1 - theta - a2)^2) / 2) dz1 dz2.
// a1 is the wedge slope (always a square root of a positive ratio in the
// consuming solvers, hence >= 0); theta + a2 shifts the z1 marginal.
struct WedgeParams {
  double theta = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
};

struct ErfPair {
  double erf = 0.0;
  double ln_erfc = 0.0;
};

// A positive quantity together with its logarithm; ln_value stays finite
// even when value underflows to zero.
struct LogValue {
  double value = 0.0;
  double ln_value = 0.0;
};

// erf(u) and log(erfc(u)); the log path is stable for u up to at least 1e4
// (large u goes through the scaled complementary error function).
// Throws domain_error on non-finite input.
ErfPair erf_family(double u);

// log(1 + erf(v)) = log(erfc(-v)), stable for all finite v.
double ln_erf1p(double v);

// Q as defined above. The inner z1 integral reduces analytically to
// sqrt(pi/2) * erfc((a1 z2 - theta - a2) / sqrt 2), leaving one adaptive
// integral over z2 in [0, truncation]. The integrand is maximal at z2 = 0
// (both factors are nonincreasing for a1 >= 0), which provides the shift
// for the log-domain path.
LogValue q_integral(const WedgeParams& p, const QuadSpec& q = {});

// P = (1/pi) e^{theta^2/2} Q; ln_value = theta^2/2 - log(pi) + ln Q.
// Consumers solving at extreme shifts must use ln_value only.
LogValue p_value(const WedgeParams& p, const QuadSpec& q = {});

// int_0^inf exp(-(z^2 + (a1 z - theta - a2)^2)/2) dz, evaluated in closed
// form by completing the square. Equals dQ/dtheta.
double half_gaussian_cross(const WedgeParams& p);
double ln_half_gaussian_cross(const WedgeParams& p);

// P(Z1 + b3 >= b2 |Z2 + b1|) for independent standard normals, via one
// adaptive integral of erfc against the Gaussian density (the absolute
// value splits the line at z2 = -b1; both halves fold onto [0, inf)).
// Requires b2 >= 0.
double wedge_probability(double b1, double b2, double b3, const QuadSpec& q = {});

}  // namespace mcb
