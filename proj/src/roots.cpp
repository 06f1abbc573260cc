#include "hsob/roots.hpp"

#include <stdexcept>
#include <utility>

namespace hsob {

Real refine_root(const ValueAndDerivative& f, Real a, Real b, precision_t bits) {
  if (a > b) std::swap(a, b);
  Real fa, fb, da;
  f(a, fa, da);
  f(b, fb, da);
  if (fa.is_zero()) return a;
  if (fb.is_zero()) return b;
  if (fa.sign() == fb.sign()) throw std::invalid_argument("refine_root: no sign change on bracket");
  const int sa = fa.sign();

  Real x = ldexp(a + b, -1);
  Real fx, dx;
  Real prev_abs;
  bool after_bisection = true;
  const int max_iter = static_cast<int>(4 * bits + 200);
  for (int it = 0; it < max_iter; ++it) {
    f(x, fx, dx);
    if (fx.is_zero()) return x;
    if (fx.sign() == sa) {
      a = x;
    } else {
      b = x;
    }
    const Real scale = max(max(abs(a), abs(b)), pow2(-bits, x.precision()));
    // a few ulps: the bracket cannot shrink below adjacent floating-point values
    const Real eps = ldexp(scale, 3 - bits);
    if (b - a <= eps) return ldexp(a + b, -1);

    // Newton is kept while it stays inside the bracket and at least halves
    // the residual; otherwise bisect.
    const bool stalled = !after_bisection && abs(fx) > ldexp(prev_abs, -1);
    prev_abs = abs(fx);
    after_bisection = false;
    if (!dx.is_zero() && !stalled) {
      const Real step = fx / dx;
      const Real next = x - step;
      if (abs(step) <= eps && next >= a && next <= b) return next;
      if (next > a && next < b) {
        x = next;
        continue;
      }
    }
    x = ldexp(a + b, -1);
    if (x == a || x == b) return x;
    after_bisection = true;
  }
  return x;
}

}  // namespace hsob
