#pragma once

#include <mcb/errors.hpp>

#include <memory>
#include <type_traits>

namespace mcb {

// Tolerances for the adaptive 1-D quadratures. `truncation` replaces the
// infinite upper limit of half-line integrals, measured in standard
// deviations of the Gaussian factor; beyond 40 the integrands here are
// below 1e-300.
struct QuadSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  double truncation = 40.0;
};

struct QuadResult {
  double value = 0.0;
  double abs_err = 0.0;
};

void validate(const QuadSpec& opts);

namespace detail {
QuadResult integrate_raw(double (*f)(double, void*), void* params,
                         double lo, double hi, const QuadSpec& opts);
}

// Adaptive Gauss-Kronrod integration of f over [lo, hi]. Throws
// convergence_error (carrying the achieved error estimate) if the requested
// tolerances cannot be met, domain_error on an invalid QuadSpec.
template <class F>
QuadResult integrate(F&& f, double lo, double hi, const QuadSpec& opts) {
  using Fn = std::remove_reference_t<F>;
  Fn& ref = f;
  auto trampoline = [](double x, void* p) -> double {
    return (*static_cast<Fn*>(p))(x);
  };
  return detail::integrate_raw(trampoline, static_cast<void*>(std::addressof(ref)), lo, hi, opts);
}

}  // namespace mcb
