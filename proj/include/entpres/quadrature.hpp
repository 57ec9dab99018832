// quadrature.hpp — adaptive Simpson integration with optional interior cuts,
// for integrands that are smooth between known breakpoints

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace entpres::quad {

namespace detail {

template <class F>
double simpson_step(F& f, double a, double fa, double b, double fb, double m, double fm,
                    double whole, double abs_tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    // 15 = Richardson factor for Simpson; accept and correct, or recurse.
    if (depth <= 0 || std::abs(delta) <= 15.0 * abs_tol)
        return left + right + delta / 15.0;
    return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * abs_tol, depth - 1) +
           simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * abs_tol, depth - 1);
}

} // namespace detail

// Adaptive Simpson on [a, b] to absolute tolerance abs_tol. The integrand must
// be smooth on the interval; split at breakpoints first (integrate_piecewise).
template <class F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol = 1e-13, int max_depth = 48) {
    if (b < a) throw std::domain_error("adaptive_simpson: b must be >= a");
    if (b == a) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_step(f, a, fa, b, fb, m, fm, whole, abs_tol, max_depth);
}

// Integrate over [a, b] splitting at the given cut points (those outside the
// interval are ignored). Each panel gets the full abs_tol; panel counts here
// are small enough that the summed error stays well under the targets.
template <class F>
double integrate_piecewise(F&& f, double a, double b, const std::vector<double>& cuts,
                           double abs_tol = 1e-13) {
    if (b < a) throw std::domain_error("integrate_piecewise: b must be >= a");
    std::vector<double> edges{a};
    for (double c : cuts)
        if (c > a && c < b) edges.push_back(c);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        total += adaptive_simpson(f, edges[i], edges[i + 1], abs_tol);
    return total;
}

} // namespace entpres::quad
