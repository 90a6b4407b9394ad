#pragma once

#include <utility>

namespace mcb {

// Solution of the tilt equation at a given normalized cut excess x
// (cut sizes are parametrized as c/2 + x sqrt(c) edges in the large-degree
// limit). theta is the unique stationary tilt, w the exponent value
//   w(x) = -2x^2 + theta^2 + log(1 + erf(2x + theta)),
// and residual the achieved value of the stationarity equation.
struct FirstMomentSolution {
  double x = 0.0;
  double theta = 0.0;
  double w = 0.0;
  double residual = 0.0;
};

// Stationarity residual theta + exp(-v^2) / (sqrt(pi) (1 + erf(v))) at
// v = 2x + theta; strictly increasing in theta.
double theta_residual(double x, double theta);

// Solves the tilt equation by bisection on theta in (-x, 0). The bracket
// sign conditions hold on the nominal range [0.37613, 0.58870]; outside it
// (but within the accepted [0.3, 0.7]) a warning is printed and the bracket
// may legitimately fail, which raises bracket_error.
FirstMomentSolution solve_theta(double x, double tol = 1e-12);

// w(x) evaluated at the solved tilt. Strictly decreasing in x with
// derivative -4 (x + theta(x)).
double w_value(double x, double tol = 1e-12);

// Root of w(x) = 0 on [0.37613, 0.58870] by bisection (w is strictly
// decreasing there); returns (x_u, theta(x_u)). tol bounds the final
// bracket width in x.
std::pair<double, double> solve_xu(double tol = 1e-8);

}  // namespace mcb
