#include "gravab/quadrature.hpp"

#include "gravab/error.hpp"

namespace gravab {

namespace {

struct Simpson {
  const std::function<double(double)>& f;
  const QuadratureOptions& options;
  long evaluations = 0;
  double error = 0.0;

  double eval(double x) {
    ++evaluations;
    return f(x);
  }

  double recurse(double a, double fa, double m, double fm, double b, double fb, double whole,
                 double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double diff = left + right - whole;
    if (depth >= options.min_depth && std::abs(diff) <= 15.0 * tol) {
      error += std::abs(diff) / 15.0;
      return left + right + diff / 15.0;
    }
    if (depth >= options.max_depth || !(lm > a && m > lm && rm > m && b > rm)) {
      throw Error(ErrorCode::numerical_failure,
                  "adaptive Simpson quadrature did not reach the requested tolerance");
    }
    return recurse(a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1) +
           recurse(m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureOptions& options) {
  if (a == b) return {};
  Simpson s{f, options};
  const double fa = s.eval(a);
  const double fb = s.eval(b);
  const double m = 0.5 * (a + b);
  const double fm = s.eval(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double value = s.recurse(a, fa, m, fm, b, fb, whole, options.abs_tolerance, 0);
  return {value, s.error, s.evaluations};
}

}  // namespace gravab
