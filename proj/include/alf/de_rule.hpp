// Double-exponential (tanh-sinh) rules: a finite-interval rule that absorbs
// integrable endpoint singularities, and a semi-infinite rule for integrands
// with a known exponential decay rate.  Both refine by level doubling and
// estimate error from the difference of consecutive levels.

#ifndef ALF_DE_RULE_HPP
#define ALF_DE_RULE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>

#include "alf/complex_kernel.hpp"

namespace alf::detail {

struct QuadResult {
    Complex value{0.0, 0.0};
    double abs_err = std::numeric_limits<double>::infinity();
    long nodes = 0;
    bool converged = false;
};

// f is called as f(x, dist_a, dist_b) where dist_a = x - a and
// dist_b = b - x are computed in transformed coordinates and stay accurate
// down to ~1e-290, so log or algebraic endpoint factors can be formed from
// them without cancellation.
template <class F>
QuadResult tanh_sinh(F&& f, double a, double b, double tol, long budget = 1000000) {
    const double len = b - a;
    const double umax = 6.8;
    QuadResult res;
    Complex prev(0.0, 0.0);
    double prev_err = std::numeric_limits<double>::infinity();

    for (int level = 0; level <= 10; ++level) {
        const double h = 1.0 / double(1 << level);
        Complex sum(0.0, 0.0);
        // k = 0 node: u = 0, fractions are 1/2
        {
            double w0 = 0.25 * pi * len; // pi cosh(0) sigma(0) sigma(-0) len
            sum += w0 * f(a + 0.5 * len, 0.5 * len, 0.5 * len);
            res.nodes++;
        }
        for (int side = -1; side <= 1; side += 2) {
            int small_count = 0;
            for (int k = 1;; ++k) {
                double u = side * k * h;
                if (std::abs(u) > umax) break;
                double v = pi * std::sinh(u);
                double q = std::exp(-std::abs(v));
                if (q == 0.0) break;
                double sig_far = 1.0 / (1.0 + q);  // fraction on the near side of 1
                double sig_near = q / (1.0 + q);   // small fraction
                double weight = len * pi * std::cosh(u) * q / ((1.0 + q) * (1.0 + q));
                double da, db, x;
                if (v >= 0.0) { // node near b
                    da = len * sig_far;
                    db = len * sig_near;
                    x = b - db;
                } else { // node near a
                    da = len * sig_near;
                    db = len * sig_far;
                    x = a + da;
                }
                Complex fv = f(x, da, db);
                Complex term = weight * fv;
                sum += term;
                res.nodes++;
                if (res.nodes > budget) {
                    res.value = sum;
                    res.converged = false;
                    return res;
                }
                double scale = std::max(std::abs(sum), 1e-280);
                if (std::abs(term) < 1e-18 * scale) {
                    if (++small_count >= 2) break;
                } else {
                    small_count = 0;
                }
            }
        }
        sum *= h;
        if (level > 0) {
            double err = std::abs(sum - prev);
            double scale = std::max(std::abs(sum), 1e-280);
            res.abs_err = std::max(err, 5e-16 * scale); // rounding floor
            res.value = sum;
            if (level >= 2 && err <= tol * scale) {
                res.converged = true;
                return res;
            }
            // roundoff floor: differences stopped shrinking
            if (level >= 4 && err >= prev_err && err <= 1e-12 * scale) {
                res.converged = true;
                return res;
            }
            prev_err = err;
        }
        prev = sum;
    }
    res.value = prev;
    res.converged = res.abs_err <= tol * std::max(std::abs(prev), 1e-280);
    return res;
}

// Integral over (0, inf) of an integrand decaying like exp(-rate * s).
// Substitution s = phi(u)/rate with phi(u) = exp(u - exp(-u)): double
// exponential at both ends for this integrand class.  The integrand is
// called as f(s) and must include its own decay.
template <class F>
QuadResult de_exp_tail(F&& f, double rate, double tol, long budget = 1000000) {
    const double ulo = -4.2, uhi = 6.9;
    QuadResult res;
    Complex prev(0.0, 0.0);
    double prev_err = std::numeric_limits<double>::infinity();

    for (int level = 0; level <= 10; ++level) {
        const double h = 1.0 / double(1 << level);
        Complex sum(0.0, 0.0);
        for (int side = -1; side <= 1; side += 2) {
            int small_count = 0;
            for (int k = (side < 0 ? 1 : 0);; ++k) {
                double u = side * k * h;
                if (u < ulo || u > uhi) break;
                double em = std::exp(-u);
                double s = std::exp(u - em) / rate;
                if (s == 0.0) break;
                double w = s * (1.0 + em);
                Complex term = w * f(s);
                sum += term;
                res.nodes++;
                if (res.nodes > budget) {
                    res.value = sum;
                    res.converged = false;
                    return res;
                }
                double scale = std::max(std::abs(sum), 1e-280);
                if (std::abs(term) < 1e-18 * scale) {
                    if (++small_count >= 2) break;
                } else {
                    small_count = 0;
                }
            }
        }
        sum *= h;
        if (level > 0) {
            double err = std::abs(sum - prev);
            double scale = std::max(std::abs(sum), 1e-280);
            res.abs_err = std::max(err, 5e-16 * scale); // rounding floor
            res.value = sum;
            if (level >= 2 && err <= tol * scale) {
                res.converged = true;
                return res;
            }
            if (level >= 4 && err >= prev_err && err <= 1e-12 * scale) {
                res.converged = true;
                return res;
            }
            prev_err = err;
        }
        prev = sum;
    }
    res.value = prev;
    res.converged = res.abs_err <= tol * std::max(std::abs(prev), 1e-280);
    return res;
}

} // namespace alf::detail

#endif
