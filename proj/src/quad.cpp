#include <mcb/quad.hpp>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

namespace mcb {

void validate(const QuadSpec& opts) {
  if (!(opts.abs_tol > 0.0) || !(opts.rel_tol > 0.0))
    throw domain_error("quadrature tolerances must be positive");
  if (!(opts.truncation >= 10.0))
    throw domain_error("quadrature truncation must be at least 10");
}

namespace detail {
namespace {

constexpr std::size_t kWorkspaceLimit = 512;

// One workspace per thread; the allocation is reused across calls.
gsl_integration_workspace* workspace() {
  thread_local gsl_integration_workspace* ws =
      gsl_integration_workspace_alloc(kWorkspaceLimit);
  return ws;
}

void disable_gsl_abort() {
  static std::once_flag flag;
  std::call_once(flag, [] { gsl_set_error_handler_off(); });
}

}  // namespace

QuadResult integrate_raw(double (*f)(double, void*), void* params,
                         double lo, double hi, const QuadSpec& opts) {
  validate(opts);
  disable_gsl_abort();

  gsl_function fn;
  fn.function = f;
  fn.params = params;

  QuadResult out;
  const int status = gsl_integration_qags(&fn, lo, hi, opts.abs_tol, opts.rel_tol,
                                          kWorkspaceLimit, workspace(),
                                          &out.value, &out.abs_err);
  if (status != GSL_SUCCESS) {
    // GSL is conservative about roundoff; accept if the achieved estimate
    // already meets the requested tolerances.
    const double target = std::max(opts.abs_tol, opts.rel_tol * std::abs(out.value));
    if (!(out.abs_err <= target)) {
      std::ostringstream msg;
      msg << "quadrature did not converge: " << gsl_strerror(status)
          << " (achieved error " << out.abs_err << ", target " << target << ")";
      throw convergence_error(msg.str());
    }
  }
  return out;
}

}  // namespace detail
}  // namespace mcb
