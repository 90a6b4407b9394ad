#include <mcb/second_moment.hpp>

#include <mcb/errors.hpp>
#include <mcb/first_moment.hpp>
#include <mcb/gauss_kernels.hpp>
#include <mcb/workers.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

namespace mcb {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNominalLo = 0.37613;
constexpr double kNominalHi = 0.58870;

void check_x_range(double x) {
  if (!std::isfinite(x) || x < 0.3 || x > 0.7) {
    std::ostringstream os;
    os << "x = " << x << " outside the accepted range [0.3, 0.7]";
    throw domain_error(os.str());
  }
  if (x < kNominalLo || x > kNominalHi) {
    std::cerr << "mcb: warning: x = " << x
              << " outside the nominal range [" << kNominalLo << ", "
              << kNominalHi << "]; saddle brackets may fail\n";
  }
}

void check_beta(double beta) {
  if (!(beta >= kBetaMin && beta <= 0.5 - kBetaMin)) {
    std::ostringstream os;
    os << "beta = " << beta << " outside [" << kBetaMin << ", "
       << 0.5 - kBetaMin << "]";
    throw domain_error(os.str());
  }
}

// Residual of one tilt equation, theta + d/dtheta log Q(theta, a1, a2).
// Strictly increasing in theta; positive at theta = 0. The derivative of
// log Q is the ratio of the boundary cross term to the wedge mass, taken
// in log domain because both factors decay like exp(-(theta+a2)^2/2).
double tilt_residual(double theta, double a1, double a2, const QuadSpec& quad) {
  const double ln_cross = ln_half_gaussian_cross({theta, a1, a2});
  const double ln_mass = q_integral({theta, a1, a2}, quad).ln_value;
  const double r = theta + std::exp(ln_cross - ln_mass);
  if (std::isnan(r)) {
    std::ostringstream os;
    os << "tilt residual is NaN at theta=" << theta << " a1=" << a1
       << " a2=" << a2;
    throw convergence_error(os.str());
  }
  return r;
}

// Attainable residual accuracy: the log-domain ratio carries a relative
// error proportional to the magnitudes of the two logs, which grow like
// (theta + a2)^2, times the achieved tilt magnitude.
double tilt_accept(double theta, double a2, double tol) {
  const double scale =
      32.0 * kEps * std::abs(theta) * (1.0 + theta * theta + a2 * a2);
  return std::max(tol, scale);
}

struct TiltRoot {
  double theta = 0.0;
  double residual = 0.0;
};

// Solves the tilt equation for one wedge factor by bracketed false position
// (Illinois). Returns nullopt when the root lies below -kThetaCap, which
// happens as the shift a2 tends to 0 (the root then runs off to -infinity).
// hint, when finite, seeds the bracket with the root of a nearby solve.
std::optional<TiltRoot> solve_tilt(double a1, double a2, double tol,
                                   const QuadSpec& quad,
                                   double hint = std::numeric_limits<double>::quiet_NaN()) {
  auto resid = [&](double th) { return tilt_residual(th, a1, a2, quad); };

  double hi = 0.0;
  double rhi = resid(0.0);
  if (rhi <= 0.0) {
    // The log-domain ratio underflowed; the root is 0 to machine precision.
    return TiltRoot{0.0, rhi};
  }

  double lo;
  if (std::isfinite(hint) && hint < -0.25 && hint > -kThetaCap) {
    lo = std::max(hint - 0.25, -kThetaCap);
  } else {
    lo = -1.0;
  }
  double rlo = resid(lo);
  while (rlo >= 0.0) {
    hi = lo;
    rhi = rlo;
    if (lo <= -kThetaCap) return std::nullopt;
    lo = std::max(2.0 * lo - 1.0, -kThetaCap);
    rlo = resid(lo);
  }

  double best_th = (std::abs(rlo) < rhi) ? lo : hi;
  double best_r = (std::abs(rlo) < rhi) ? rlo : rhi;
  int last_side = 0;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = (rhi != rlo) ? (lo * rhi - hi * rlo) / (rhi - rlo)
                              : 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
    const double rm = resid(mid);
    if (std::abs(rm) < std::abs(best_r)) {
      best_th = mid;
      best_r = rm;
    }
    if (std::abs(rm) <= tilt_accept(mid, a2, tol)) return TiltRoot{mid, rm};
    if (rm < 0.0) {
      lo = mid;
      rlo = rm;
      if (last_side == -1) rhi *= 0.5;  // Illinois cut of the stale end
      last_side = -1;
    } else {
      hi = mid;
      rhi = rm;
      if (last_side == +1) rlo *= 0.5;
      last_side = +1;
    }
    if (hi - lo <= 1e-15 * std::max(1.0, -lo)) break;
  }
  if (std::abs(best_r) <= tilt_accept(best_th, a2, tol)) {
    return TiltRoot{best_th, best_r};
  }
  std::ostringstream os;
  os << "tilt solve stalled at theta=" << best_th << " residual=" << best_r
     << " (a1=" << a1 << " a2=" << a2 << ", target " << tilt_accept(best_th, a2, tol)
     << ")";
  throw convergence_error(os.str());
}

// Shared geometry of one (x, beta) saddle problem.
struct SaddleShape {
  double x, beta, hb;
  double a1p, a1q;   // slope parameters of the aligned / anti-aligned wedge
  double k1, k2;     // beta^{3/2}, hb^{3/2}: shift scalings
  double sb, shb;    // sqrt(beta), sqrt(hb)

  SaddleShape(double x_, double beta_)
      : x(x_), beta(beta_), hb(0.5 - beta_),
        a1p(std::sqrt((0.5 - beta_) / beta_)),
        a1q(std::sqrt(beta_ / (0.5 - beta_))),
        k1(beta_ * std::sqrt(beta_)),
        k2((0.5 - beta_) * std::sqrt(0.5 - beta_)),
        sb(std::sqrt(beta_)), shb(std::sqrt(0.5 - beta_)) {}

  double t_equation(double t, double th1, double th2) const {
    return -t / (beta * beta) + (x - t) / (hb * hb) - 2.0 * th1 / sb +
           2.0 * th2 / shb;
  }
};

// Resolution limit of the t equation: its slope is of order
// 1/beta^2 + 1/hb^2 and t carries relative rounding eps.
double outer_accept(const SaddleShape& g, double tol) {
  const double slope = 1.0 / (g.beta * g.beta) + 1.0 / (g.hb * g.hb);
  return std::max(tol, 256.0 * kEps * slope * std::max(1.0, g.x));
}

}  // namespace

double saddle_t_residual(double x, double beta, double t, double tol,
                         const QuadSpec& quad) {
  validate(quad);
  check_beta(beta);
  check_x_range(x);
  if (!(t >= 0.0 && t <= x)) {
    std::ostringstream os;
    os << "t = " << t << " outside [0, x] with x = " << x;
    throw domain_error(os.str());
  }
  const SaddleShape g(x, beta);
  auto s1 = solve_tilt(g.a1p, t / g.k1, tol, quad);
  if (!s1) return kInf;
  auto s2 = solve_tilt(g.a1q, (x - t) / g.k2, tol, quad);
  if (!s2) return -kInf;
  return g.t_equation(t, s1->theta, s2->theta);
}

SaddleSolution solve_saddle(double x, double beta, double tol,
                            const QuadSpec& quad) {
  validate(quad);
  if (!(tol > 0.0)) throw domain_error("tol must be positive");
  check_beta(beta);
  check_x_range(x);

  const SaddleShape g(x, beta);
  const double inner_tol = std::max(1e-14, 1e-3 * tol);

  // Warm starts: tilt roots move continuously with t, so each side reuses
  // its previous root as the next bracket seed.
  double hint1 = std::numeric_limits<double>::quiet_NaN();
  double hint2 = std::numeric_limits<double>::quiet_NaN();

  struct Eval {
    double t = 0.0, s = 0.0;
    double th1 = 0.0, th2 = 0.0;
    double r1 = 0.0, r2 = 0.0;
    bool finite = false;
  };
  auto eval = [&](double t) {
    Eval e;
    e.t = t;
    auto s1 = solve_tilt(g.a1p, t / g.k1, inner_tol, quad, hint1);
    if (!s1) {
      e.s = kInf;  // aligned tilt diverged: t too close to 0
      return e;
    }
    hint1 = e.th1 = s1->theta;
    e.r1 = s1->residual;
    auto s2 = solve_tilt(g.a1q, (x - t) / g.k2, inner_tol, quad, hint2);
    if (!s2) {
      e.s = -kInf;  // anti-aligned tilt diverged: t too close to x
      return e;
    }
    hint2 = e.th2 = s2->theta;
    e.r2 = s2->residual;
    e.s = g.t_equation(t, e.th1, e.th2);
    e.finite = std::isfinite(e.s);
    return e;
  };

  // The t equation is strictly decreasing with limits +inf at t -> 0+ and
  // -inf at t -> x-; the endpoints are virtual (never evaluated).
  double lo = 0.0, hi = x;
  double rlo = kInf, rhi = -kInf;
  Eval best;
  best.s = kInf;
  const double accept = outer_accept(g, tol);
  int last_side = 0;
  for (int iter = 0; iter < 200; ++iter) {
    double mid;
    if (std::isfinite(rlo) && std::isfinite(rhi) && rhi != rlo) {
      mid = (lo * rhi - hi * rlo) / (rhi - rlo);
      if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
    } else {
      mid = 0.5 * (lo + hi);
    }
    const Eval e = eval(mid);
    if (e.finite && std::abs(e.s) < std::abs(best.s)) best = e;
    if (e.finite && std::abs(e.s) <= accept) break;
    if (e.s > 0.0) {
      lo = mid;
      rlo = e.s;
      if (last_side == +1 && std::isfinite(rhi)) rhi *= 0.5;
      last_side = +1;
    } else {
      hi = mid;
      rhi = e.s;
      if (last_side == -1 && std::isfinite(rlo)) rlo *= 0.5;
      last_side = -1;
    }
    if (hi - lo <= 1e-15 * std::max(1.0, x)) break;
  }

  if (!best.finite) {
    std::ostringstream os;
    os << "saddle at x=" << x << " beta=" << beta
       << " has no interior t: a tilt diverges on the whole bracket";
    throw divergence_error(os.str());
  }
  if (std::abs(best.s) > accept) {
    std::ostringstream os;
    os << "t equation stalled at t=" << best.t << " residual=" << best.s
       << " (x=" << x << " beta=" << beta << ", target " << accept << ")";
    throw convergence_error(os.str());
  }

  SaddleSolution sol;
  sol.x = x;
  sol.beta = beta;
  sol.t = best.t;
  sol.theta1 = best.th1;
  sol.theta2 = best.th2;
  sol.W = std::numeric_limits<double>::quiet_NaN();
  sol.residuals = {best.r1, best.r2, best.s};
  sol.boundary = (best.t <= 1e-6 * x) || (best.t >= (1.0 - 1e-6) * x);
  return sol;
}

double l_value(double x, double beta, double t, double theta1, double theta2,
               const QuadSpec& quad) {
  validate(quad);
  if (!(beta > 0.0 && beta < 0.5)) {
    throw domain_error("beta must lie strictly inside (0, 1/2)");
  }
  if (!(t >= 0.0 && t <= x)) throw domain_error("t must lie in [0, x]");
  if (!std::isfinite(theta1) || !std::isfinite(theta2)) {
    throw domain_error("tilts must be finite");
  }
  const SaddleShape g(x, beta);
  const double entropy = -2.0 * beta * std::log(beta) - 2.0 * g.hb * std::log(g.hb);
  const double quadratic = -t * t / (2.0 * beta * beta) -
                           (x - t) * (x - t) / (2.0 * g.hb * g.hb);
  const double lp1 = p_value({theta1, g.a1p, t / g.k1}, quad).ln_value;
  const double lp2 = p_value({theta2, g.a1q, (x - t) / g.k2}, quad).ln_value;
  return entropy + quadratic + 2.0 * beta * lp1 + 2.0 * g.hb * lp2;
}

SaddleSolution w_big(double x, double beta, double tol, const QuadSpec& quad) {
  SaddleSolution sol = solve_saddle(x, beta, tol, quad);
  sol.W = l_value(x, beta, sol.t, sol.theta1, sol.theta2, quad);
  return sol;
}

BetaMaximum max_w_over_beta(double x, int grid, double tol) {
  if (grid < 64) throw domain_error("beta grid must have at least 64 points");
  check_x_range(x);

  const double b_lo = kBetaMin, b_hi = 0.25;
  std::vector<double> betas(static_cast<size_t>(grid));
  std::vector<double> values(static_cast<size_t>(grid),
                             std::numeric_limits<double>::quiet_NaN());
  for (int i = 0; i < grid; ++i) {
    betas[static_cast<size_t>(i)] =
        b_lo + (b_hi - b_lo) * static_cast<double>(i) / (grid - 1);
  }
  parallel_for(static_cast<size_t>(grid), [&](size_t i) {
    try {
      values[i] = w_big(x, betas[i], tol).W;
    } catch (const mcb::error&) {
      // left NaN; counted below
    }
  });

  int failures = 0;
  int best_i = -1;
  for (int i = 0; i < grid; ++i) {
    const double v = values[static_cast<size_t>(i)];
    if (std::isnan(v)) {
      ++failures;
    } else if (best_i < 0 || v > values[static_cast<size_t>(best_i)]) {
      best_i = i;
    }
  }
  if (failures * 10 > grid) {
    std::ostringstream os;
    os << "beta grid at x=" << x << ": " << failures << " of " << grid
       << " saddle solves failed";
    throw convergence_error(os.str());
  }

  double beta_best = betas[static_cast<size_t>(best_i)];
  double w_best = values[static_cast<size_t>(best_i)];

  // Golden-section refinement between the neighbors of the best grid point.
  double a = betas[static_cast<size_t>(std::max(best_i - 1, 0))];
  double b = betas[static_cast<size_t>(std::min(best_i + 1, grid - 1))];
  auto value_at = [&](double beta) {
    try {
      return w_big(x, beta, tol).W;
    } catch (const mcb::error&) {
      return -kInf;
    }
  };
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = value_at(c), fd = value_at(d);
  while (b - a > 1e-8) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = value_at(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = value_at(d);
    }
    const double f_in = std::max(fc, fd);
    if (f_in > w_best) {
      w_best = f_in;
      beta_best = (fc > fd) ? c : d;
    }
  }

  BetaMaximum out;
  out.beta_star = beta_best;
  out.W_star = w_best;
  out.gap = w_best - 2.0 * w_value(x);
  out.grid_failures = failures;
  return out;
}

double solve_xl(double tol_x, double gap_tol, int grid) {
  if (!(tol_x > 0.0) || !(gap_tol > 0.0)) {
    throw domain_error("tol_x and gap_tol must be positive");
  }
  const double x_hi0 = solve_xu(1e-10).first;
  double lo = kNominalLo, hi = x_hi0;

  auto beats = [&](double x) {
    return max_w_over_beta(x, grid).gap > gap_tol;
  };
  const bool blo = beats(lo), bhi = beats(hi);
  if (blo || !bhi) {
    std::ostringstream os;
    os << "second-moment classification is not bracketed: gap("
       << lo << ") " << (blo ? ">" : "<=") << " tol, gap(" << hi << ") "
       << (bhi ? ">" : "<=") << " tol";
    throw inconsistency_error(os.str());
  }
  while (hi - lo > tol_x) {
    const double mid = 0.5 * (lo + hi);
    if (beats(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<ScanRow> scan(double x, double beta_min, double beta_max,
                          int steps) {
  if (!(beta_min >= kBetaMin && beta_max <= 0.5 - kBetaMin &&
        beta_min <= beta_max)) {
    std::ostringstream os;
    os << "scan betas must satisfy " << kBetaMin << " <= beta_min <= beta_max <= "
       << 0.5 - kBetaMin;
    throw domain_error(os.str());
  }
  if (steps < 1) throw domain_error("steps must be at least 1");
  check_x_range(x);
  const double two_w = 2.0 * w_value(x);

  std::vector<ScanRow> rows(static_cast<size_t>(steps));
  parallel_for(static_cast<size_t>(steps), [&](size_t i) {
    ScanRow& row = rows[i];
    row.x = x;
    row.beta = (steps == 1)
                   ? beta_min
                   : beta_min + (beta_max - beta_min) * static_cast<double>(i) /
                         (steps - 1);
    row.two_w = two_w;
    try {
      const SaddleSolution sol = w_big(x, row.beta);
      row.t = sol.t;
      row.theta1 = sol.theta1;
      row.theta2 = sol.theta2;
      row.W = sol.W;
      row.gap = sol.W - two_w;
      row.ok = true;
    } catch (const mcb::error& e) {
      row.ok = false;
      row.error = e.what();
    }
  });
  return rows;
}

}  // namespace mcb
