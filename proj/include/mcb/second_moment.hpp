#pragma once

#include <mcb/quad.hpp>

#include <array>
#include <string>
#include <vector>

namespace mcb {

// Saddle point of the pair-overlap exponent at one (x, beta): the overlap
// profile puts beta (resp. 1/2 - beta) of the vertices in the aligned
// (resp. anti-aligned) classes of a pair of half-half colorings. t is the
// aligned share of the normalized cut excess, theta1/theta2 the tilts of
// the two wedge factors, W the exponent value. residuals holds the achieved
// values of the two tilt equations and the t equation.
struct SaddleSolution {
  double x = 0.0;
  double beta = 0.0;
  double t = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double W = 0.0;
  std::array<double, 3> residuals{0.0, 0.0, 0.0};
  bool boundary = false;  // t pinned at an end of [0, x]
};

// One row of a beta scan: the saddle data plus the first-moment reference
// level two_w = 2 w(x) and gap = W - two_w. Failed solves keep ok = false
// and carry the reason instead of fabricated numbers.
struct ScanRow {
  double x = 0.0;
  double beta = 0.0;
  double t = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double W = 0.0;
  double two_w = 0.0;
  double gap = 0.0;
  bool ok = false;
  std::string error;
};

struct BetaMaximum {
  double beta_star = 0.0;
  double W_star = 0.0;
  double gap = 0.0;      // W_star - 2 w(x)
  int grid_failures = 0;
};

// Search floor for beta: below this the shift t / beta^{3/2} is numerically
// extreme; the exponent tends to -inf as beta -> 0, so the floor does not
// affect maxima. All wedge masses are evaluated in log domain regardless.
inline constexpr double kBetaMin = 1e-4;

// Tilt roots below -60 are reported as divergent: past that point the
// log wedge mass is numerically linear in theta and no root is representable.
inline constexpr double kThetaCap = 60.0;

// Default classification threshold for solve_xl: a beta profile counts as
// beating the first-moment level when its gap exceeds this. The gap grows
// quadratically in x above the boundary (measured coefficient about 8.1),
// so the threshold must stay well below tol_x^2 * 8; 1e-9 keeps the induced
// boundary shift near 1e-5 while sitting far above the 1e-14 noise floor.
inline constexpr double kGapTolDefault = 1e-9;

// t-equation residual at fixed t with both tilts re-solved; strictly
// decreasing in t on (0, x). Returns +inf when theta1 diverges (t near 0)
// and -inf when theta2 diverges (t near x).
double saddle_t_residual(double x, double beta, double t, double tol = 1e-12,
                         const QuadSpec& quad = {});

// Solves the two tilt equations and the t equation by nested bisection
// (inner: expanding bracket on each tilt, strictly increasing residual;
// outer: bisection on t in (0, x), strictly decreasing residual whose signs
// at the endpoints are +/- by the divergence analysis above). W is not
// filled here; see w_big. Throws domain_error for beta outside
// [kBetaMin, 1/2 - kBetaMin], divergence_error if a tilt diverges at the
// converged t, convergence_error if residual targets cannot be met.
SaddleSolution solve_saddle(double x, double beta, double tol = 1e-10,
                            const QuadSpec& quad = {});

// solve_saddle plus the exponent value
//   W = -2 b log b - 2 h log h - t^2/(2 b^2) - (x-t)^2/(2 h^2)
//       + 2 b lnP(theta1, sqrt(h/b), t/b^{3/2})
//       + 2 h lnP(theta2, sqrt(b/h), (x-t)/h^{3/2}),   h = 1/2 - b,
// evaluated at the saddle (this is l_value at the saddle arguments).
SaddleSolution w_big(double x, double beta, double tol = 1e-10,
                     const QuadSpec& quad = {});

// The same objective at arbitrary (not necessarily stationary) arguments;
// convex in (theta1, theta2) with the saddle as its minimum over tilts.
double l_value(double x, double beta, double t, double theta1, double theta2,
               const QuadSpec& quad = {});

// Maximizes W(x, .) over beta in [kBetaMin, 1/4] (the exponent is symmetric
// about 1/4) by a coarse grid followed by golden-section refinement around
// the best grid point. Individual solver failures skip the grid point; more
// than 10% failures raise convergence_error.
BetaMaximum max_w_over_beta(double x, int grid = 64, double tol = 1e-10);

// Bisection on x in [0.37613, x_u] classifying each x by whether the best
// beta profile beats the first-moment level by more than gap_tol. Raises
// inconsistency_error if the endpoint classifications are already on the
// wrong sides. Returns the boundary to within tol_x.
double solve_xl(double tol_x = 1e-4, double gap_tol = kGapTolDefault, int grid = 64);

// One saddle row per beta on the inclusive grid [beta_min, beta_max] with
// `steps` points; failures are recorded in-band.
std::vector<ScanRow> scan(double x, double beta_min, double beta_max, int steps);

}  // namespace mcb
