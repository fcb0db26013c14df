#pragma once

#include <cmath>
#include <functional>

namespace rieszlab {

namespace detail {

template <class F>
double simpson(F&& f, double a, double fa, double b, double fb, double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adapt(F&& f, double a, double fa, double b, double fb, double m, double fm,
             double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, lm, flm);
  const double right = simpson(f, m, fm, b, fb, rm, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adapt(f, a, fa, m, fm, lm, flm, left, tol * 0.5, depth - 1) +
         adapt(f, m, fm, b, fb, rm, frm, right, tol * 0.5, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b].  The tolerance is applied as
/// rel_tol * |first Simpson estimate| with abs_floor as a lower cutoff, which
/// is adequate here: every integrand fed to this routine is smooth and of one
/// sign on its piece.
template <class F>
double integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-10,
                          double abs_floor = 1e-300, int max_depth = 48) {
  if (!(b > a)) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = detail::simpson(f, a, fa, b, fb, m, fm);
  const double tol = std::max(std::abs(whole) * rel_tol, abs_floor);
  return detail::adapt(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace rieszlab
