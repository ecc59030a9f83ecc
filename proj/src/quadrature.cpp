#include "vanetsim/quadrature.hpp"

#include <cmath>
#include <string>

namespace vanetsim {

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    const QuadratureOptions& opts;
    bool failed = false;
    double worst_error = 0.0;

    double eval(double x) {
        double y = f(x);
        if (!std::isfinite(y)) {
            throw std::domain_error("integrate: integrand non-finite at x=" + std::to_string(x));
        }
        return y;
    }

    static double simpson(double fa, double fm, double fb, double h) {
        return (fa + 4.0 * fm + fb) * h / 6.0;
    }

    double recurse(double a, double b, double fa, double fm, double fb, double whole,
                   double tol, int depth) {
        double m = 0.5 * (a + b);
        double lm = 0.5 * (a + m);
        double rm = 0.5 * (m + b);
        double flm = eval(lm);
        double frm = eval(rm);
        double left = simpson(fa, flm, fm, m - a);
        double right = simpson(fm, frm, fb, b - m);
        double delta = left + right - whole;
        if (depth >= opts.min_depth && std::fabs(delta) <= 15.0 * tol) {
            return left + right + delta / 15.0;
        }
        if (depth >= opts.max_depth) {
            failed = true;
            worst_error += std::fabs(delta) / 15.0;
            return left + right + delta / 15.0;
        }
        return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
               recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }
};

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts) {
    if (!(a <= b)) {
        throw std::domain_error("integrate: requires a <= b");
    }
    if (!(opts.tol > 0.0)) {
        throw std::domain_error("integrate: tolerance must be positive");
    }
    if (a == b) return 0.0;

    SimpsonState st{f, opts};
    double fa = st.eval(a);
    double m = 0.5 * (a + b);
    double fm = st.eval(m);
    double fb = st.eval(b);
    double whole = SimpsonState::simpson(fa, fm, fb, b - a);
    double result = st.recurse(a, b, fa, fm, fb, whole, opts.tol, 1);
    if (st.failed && st.worst_error > opts.tol) {
        throw QuadratureError("integrate: max subdivision depth exceeded", result, st.worst_error);
    }
    return result;
}

} // namespace vanetsim
