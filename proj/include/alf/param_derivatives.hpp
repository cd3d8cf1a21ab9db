// Parameter derivatives of associated Legendre functions: the four
// closed-form results (order derivatives at integer orders, degree
// derivatives at odd-half-integer degrees), the Laplace-type integral
// representations of P and Q they rest on, and a Richardson-extrapolated
// finite-difference oracle.
//
// Gamma-ratio prefactors are evaluated as Pochhammer products and entire
// reciprocal gammas, never as quotients of two gamma values, so removable
// zero/pole pairs cancel exactly.  All fractional powers of z^2 - 1 follow
// the (z+1)^a (z-1)^a factor convention.

#ifndef ALF_PARAM_DERIVATIVES_HPP
#define ALF_PARAM_DERIVATIVES_HPP

#include <cmath>
#include <complex>
#include <string>

#include "alf/complex_kernel.hpp"
#include "alf/error.hpp"
#include "alf/gamma.hpp"
#include "alf/legendre.hpp"
#include "alf/quadrature.hpp"
#include "alf/region.hpp"
#include "alf/whipple_map.hpp"

namespace alf {

enum class DerivMethod { closed_form, quadrature, finite_difference };

struct DerivativeResult {
    Complex value{0.0, 0.0};
    DerivMethod method = DerivMethod::closed_form;
    double error_estimate = 0.0;
    RegionVerdict region_checked;
};

namespace detail {

// default tolerance assumed for the underlying P/Q evaluations, used to
// propagate a closed-form error estimate
inline constexpr double legendre_eps = 1e-10;

inline double factorial(int n) {
    double f = 1.0;
    for (int j = 2; j <= n; ++j) f *= j;
    return f;
}

} // namespace detail

// Q_{nu-1/2}^mu(z) through the Macdonald-function integral
//   (z^2-1)^{-nu/2-1/4} e^{i pi mu} / Gamma(nu-mu+1/2)
//       * int_0^inf exp(-z t / sqrt(z^2-1)) K_mu(t) t^{nu-1/2} dt,
// valid for z in C \ [-1,1] (where Re f(z) > 0 > -1 guarantees decay) and
// Re nu > |Re mu| - 1/2 for integrability at t = 0.
inline DerivativeResult q_via_k_integral(const Complex& nu, const Complex& mu,
                                         const Complex& z, double tol = 1e-10) {
    DerivativeResult res;
    res.method = DerivMethod::quadrature;
    res.region_checked = classify_region(z);
    if (!res.region_checked.in_cut_plane_pm1)
        throw domain_error("q_via_k_integral: argument on the cut [-1, 1]");
    if (!(nu.real() > std::abs(mu.real()) - 0.5))
        throw constraint_error(
            "q_via_k_integral: requires Re nu > |Re mu| - 1/2 (integrand t^{nu-1/2} K_mu)");
    IntegrandSpec spec;
    spec.bessel_kind = BesselKind::K;
    spec.bessel_order = mu;
    spec.power_exponent = nu;
    spec.decay_coefficient = f_map(z);
    auto I = laplace_bessel_integral(spec, std::min(tol, 1e-11));
    if (!I.converged)
        throw convergence_error("q_via_k_integral: quadrature did not converge",
                                I.abs_error_estimate);
    Complex pref = half_power(z, -0.5 * nu - 0.25) * std::exp(Complex(0.0, pi) * mu) *
                   recip_gamma(nu - mu + 0.5);
    res.value = pref * I.value;
    res.error_estimate = std::abs(pref) * I.abs_error_estimate + 1e-13 * std::abs(res.value);
    return res;
}

// P_{nu-1/2}^{-mu}(z) = sqrt(2/pi) (z^2-1)^{mu/2}
//   / (Gamma(mu-nu+1/2) Gamma(mu+nu+1/2)) * int_0^inf e^{-zt} K_nu(t) t^{mu-1/2} dt,
// valid for Re z > -1 and Re mu > |Re nu| - 1/2.
inline DerivativeResult p_via_k_integral(const Complex& nu, const Complex& mu,
                                         const Complex& z, double tol = 1e-10) {
    DerivativeResult res;
    res.method = DerivMethod::quadrature;
    res.region_checked = classify_region(z);
    if (!(z.real() > -1.0))
        throw constraint_error("p_via_k_integral: requires Re z > -1");
    if (!(mu.real() > std::abs(nu.real()) - 0.5))
        throw constraint_error(
            "p_via_k_integral: requires Re mu > |Re nu| - 1/2 (integrand t^{mu-1/2} K_nu)");
    IntegrandSpec spec;
    spec.bessel_kind = BesselKind::K;
    spec.bessel_order = nu;
    spec.power_exponent = mu;
    spec.decay_coefficient = z;
    auto I = laplace_bessel_integral(spec, std::min(tol, 1e-11));
    if (!I.converged)
        throw convergence_error("p_via_k_integral: quadrature did not converge",
                                I.abs_error_estimate);
    Complex pref = std::sqrt(2.0 / pi) * half_power(z, 0.5 * mu) *
                   recip_gamma(mu - nu + 0.5) * recip_gamma(mu + nu + 0.5);
    res.value = pref * I.value;
    res.error_estimate = std::abs(pref) * I.abs_error_estimate + 1e-13 * std::abs(res.value);
    return res;
}

// Q_{nu-1/2}^mu(z) = sqrt(pi/2) e^{i pi mu} (z^2-1)^{mu/2}
//   * int_0^inf e^{-zt} t^{mu-1/2} I_nu(t) dt,
// valid for Re z > 1 and Re mu > -Re nu - 1/2.
inline DerivativeResult q_via_i_integral(const Complex& nu, const Complex& mu,
                                         const Complex& z, double tol = 1e-10) {
    DerivativeResult res;
    res.method = DerivMethod::quadrature;
    res.region_checked = classify_region(z);
    if (!(z.real() > 1.0))
        throw constraint_error("q_via_i_integral: requires Re z > 1 (growth of I_nu)");
    if (!(mu.real() > -nu.real() - 0.5))
        throw constraint_error("q_via_i_integral: requires Re mu > -Re nu - 1/2");
    IntegrandSpec spec;
    spec.bessel_kind = BesselKind::I;
    spec.bessel_order = nu;
    spec.power_exponent = mu;
    spec.decay_coefficient = z;
    auto I = laplace_bessel_integral(spec, std::min(tol, 1e-11));
    if (!I.converged)
        throw convergence_error("q_via_i_integral: quadrature did not converge",
                                I.abs_error_estimate);
    Complex pref = std::sqrt(0.5 * pi) * std::exp(Complex(0.0, pi) * mu) *
                   half_power(z, 0.5 * mu);
    res.value = pref * I.value;
    res.error_estimate = std::abs(pref) * I.abs_error_estimate + 1e-13 * std::abs(res.value);
    return res;
}

// P_{nu-1/2}^mu(z) = (2/pi) e^{-i mu pi} sin(mu pi) Q_{nu-1/2}^mu(z)
//   + (z^2-1)^{-nu/2-1/4} / Gamma(nu-mu+1/2)
//       * int_0^inf exp(-z t / sqrt(z^2-1)) I_mu(t) t^{nu-1/2} dt,
// valid where Re f(z) > 1 (inside the boundary curve through B and C) and
// Re mu > -Re nu - 1/2.
inline DerivativeResult p_via_i_integral(const Complex& nu, const Complex& mu,
                                         const Complex& z, double tol = 1e-10) {
    DerivativeResult res;
    res.method = DerivMethod::quadrature;
    res.region_checked = classify_region(z);
    if (!res.region_checked.re_f_gt_one)
        throw constraint_error(
            "p_via_i_integral: requires Re z/(sqrt(z+1) sqrt(z-1)) > 1; z lies outside the "
            "convergence region delimited in quadrant I by the boundary curve through "
            "B = (0.91856, 0.17678) and C = (1, 0.48587)");
    if (!(mu.real() > -nu.real() - 0.5))
        throw constraint_error("p_via_i_integral: requires Re mu > -Re nu - 1/2");
    IntegrandSpec spec;
    spec.bessel_kind = BesselKind::I;
    spec.bessel_order = mu;
    spec.power_exponent = nu;
    spec.decay_coefficient = f_map(z);
    auto I = laplace_bessel_integral(spec, std::min(tol, 1e-11));
    if (!I.converged)
        throw convergence_error("p_via_i_integral: quadrature did not converge",
                                I.abs_error_estimate);
    Complex qterm = (2.0 / pi) * std::exp(Complex(0.0, -pi) * mu) * detail::sin_pi(mu) *
                    legendre_q(nu - 0.5, mu, z);
    Complex pref = half_power(z, -0.5 * nu - 0.25) * recip_gamma(nu - mu + 0.5);
    res.value = qterm + pref * I.value;
    res.error_estimate = std::abs(pref) * I.abs_error_estimate +
                         detail::legendre_eps * std::abs(qterm) +
                         1e-13 * std::abs(res.value);
    return res;
}

// [d/dmu Q_{nu-1/2}^mu(z)]_{mu = +-m} =
//   Gamma(nu-m+1/2)/Gamma(nu -+ m+1/2) * { [i pi + psi(nu -+ m + 1/2)] Q_{nu-1/2}^m(z)
//     +- m! sum_{k=0}^{m-1} (-1)^{k-m} (z^2-1)^{(k-m)/2} / (k!(m-k) 2^{k-m+1})
//            Q_{nu+k-m-1/2}^k(z) }
inline DerivativeResult dq_dorder_at_int(const Complex& nu, int m, int sign, const Complex& z) {
    if (m < 0) throw domain_error("dq_dorder_at_int: m must be nonnegative");
    DerivativeResult res;
    res.region_checked = classify_region(z);
    if (!res.region_checked.in_cut_plane_minus_inf_1)
        throw domain_error("dq_dorder_at_int: argument on the cut (-inf, 1]");
    const Complex a_minus = nu - double(m) + 0.5;
    const Complex a_sign = (sign >= 0) ? a_minus : nu + double(m) + 0.5;
    if (near_nonpositive_integer(a_minus, 1e-10))
        throw pole_error("dq_dorder_at_int: pole of Gamma(nu - m + 1/2)");
    if (near_nonpositive_integer(a_sign, 1e-10))
        throw pole_error("dq_dorder_at_int: pole of Gamma(nu -+ m + 1/2)");
    Complex ratio =
        (sign >= 0) ? Complex(1.0, 0.0) : 1.0 / pochhammer(a_minus, 2 * m);
    Complex psi_term = Complex(0.0, pi) + digamma(a_sign);
    Complex q_main = legendre_q(nu - 0.5, Complex(double(m), 0.0), z);
    Complex total = psi_term * q_main;
    double mag = std::abs(total);
    double mfact = detail::factorial(m);
    for (int k = 0; k < m; ++k) {
        double sgn = ((m - k) % 2 == 0) ? 1.0 : -1.0; // (-1)^{k-m}
        Complex coef = sgn * mfact * half_power(z, 0.5 * double(k - m)) /
                       (detail::factorial(k) * double(m - k) *
                        std::pow(2.0, double(k - m + 1)));
        Complex term = coef * legendre_q(nu + double(k - m) - 0.5, Complex(double(k), 0.0), z);
        total += double(sign) * term;
        mag += std::abs(term);
    }
    res.value = ratio * total;
    res.method = DerivMethod::closed_form;
    res.error_estimate = detail::legendre_eps * std::abs(ratio) * mag;
    return res;
}

// [d/dnu P_{nu-1/2}^mu(z)]_{nu = +-n} = +- {
//   [psi(mu+n+1/2) - psi(mu-n+1/2)] P_{n-1/2}^mu(z)
//   + n! sum_{k=0}^{n-1} (z^2-1)^{(n-k)/2}
//         / ((mu-n+1/2)_{2(n-k)} k!(n-k) 2^{k-n+1}) P_{k-1/2}^{mu+n-k}(z) }
inline DerivativeResult dp_ddegree_at_halfint(int n, int sign, const Complex& mu,
                                              const Complex& z) {
    if (n < 0) throw domain_error("dp_ddegree_at_halfint: n must be nonnegative");
    DerivativeResult res;
    res.region_checked = classify_region(z);
    if (!res.region_checked.in_cut_plane_minus_inf_1)
        throw domain_error("dp_ddegree_at_halfint: argument on the cut (-inf, 1]");
    res.method = DerivMethod::closed_form;
    if (n == 0) { // P_{nu-1/2} is even in nu, so the derivative vanishes
        res.value = Complex(0.0, 0.0);
        res.error_estimate = 0.0;
        return res;
    }
    const Complex a = mu - double(n) + 0.5;
    if (near_nonpositive_integer(a, 1e-10))
        throw pole_error("dp_ddegree_at_halfint: pole of Gamma(mu - n + 1/2)");
    if (near_nonpositive_integer(mu + double(n) + 0.5, 1e-10))
        throw pole_error("dp_ddegree_at_halfint: pole of psi(mu + n + 1/2)");
    Complex psi_term = digamma(mu + double(n) + 0.5) - digamma(a);
    Complex total = psi_term * legendre_p(double(n) - 0.5, mu, z);
    double mag = std::abs(total);
    double nfact = detail::factorial(n);
    for (int k = 0; k < n; ++k) {
        Complex poch = pochhammer(a, 2 * (n - k)); // Gamma(mu+n-2k+1/2)/Gamma(mu-n+1/2)
        Complex coef = nfact * half_power(z, 0.5 * double(n - k)) /
                       (poch * detail::factorial(k) * double(n - k) *
                        std::pow(2.0, double(k - n + 1)));
        Complex term = coef * legendre_p(double(k) - 0.5, mu + double(n - k), z);
        total += term;
        mag += std::abs(term);
    }
    res.value = double(sign) * total;
    res.error_estimate = detail::legendre_eps * mag;
    return res;
}

// [d/dnu Q_{nu-1/2}^mu(z)]_{nu = +-n} =
//   -sqrt(pi/2) e^{i pi mu} Gamma(mu-n+1/2) (z^2-1)^{-1/4}
//       Q_{mu-1/2}^n(z / sqrt(z^2-1))
//   +- n! sum_{k=0}^{n-1} (z^2-1)^{(n-k)/2} / (2^{k-n+1} k!(n-k)) Q_{k-1/2}^{mu+k-n}(z)
inline DerivativeResult dq_ddegree_at_halfint(int n, int sign, const Complex& mu,
                                              const Complex& z) {
    if (n < 0) throw domain_error("dq_ddegree_at_halfint: n must be nonnegative");
    DerivativeResult res;
    res.region_checked = classify_region(z);
    if (!res.region_checked.in_cut_plane_minus_inf_1)
        throw domain_error("dq_ddegree_at_halfint: argument on the cut (-inf, 1]");
    const Complex a = mu - double(n) + 0.5;
    if (near_nonpositive_integer(a, 1e-10))
        throw pole_error("dq_ddegree_at_halfint: pole of Gamma(mu - n + 1/2)");
    Complex w = f_map(z);
    if (on_cut_inf_1(w))
        throw domain_error(
            "dq_ddegree_at_halfint: mapped argument z/(sqrt(z+1) sqrt(z-1)) lies on the cut "
            "(-inf, 1]; the first term is not evaluable there (z on the imaginary axis)");
    Complex qw = legendre_q(mu - 0.5, Complex(double(n), 0.0), w);
    if (z.real() < 0.0) {
        // Crossing the imaginary axis drags w across the cut (0,1) of the
        // mapped-argument Q; the analytic continuation of the first term to
        // the left half-plane picks up a P contribution (and a sign for odd
        // n, where the jump carries Q itself).
        Complex pw = legendre_p(mu - 0.5, Complex(double(n), 0.0), w);
        double side = (z.imag() > 0.0) ? 1.0 : -1.0;
        Complex cont = qw + Complex(0.0, side * pi) * pw;
        qw = (n % 2 == 0) ? cont : -cont;
    }
    Complex first = -std::sqrt(0.5 * pi) * std::exp(Complex(0.0, pi) * mu) * gamma_c(a) *
                    half_power(z, Complex(-0.25, 0.0)) * qw;
    Complex total = first;
    double mag = std::abs(first);
    double nfact = detail::factorial(n);
    for (int k = 0; k < n; ++k) {
        Complex coef = nfact * half_power(z, 0.5 * double(n - k)) /
                       (std::pow(2.0, double(k - n + 1)) * detail::factorial(k) *
                        double(n - k));
        Complex term = coef * legendre_q(double(k) - 0.5, mu + double(k - n), z);
        total += double(sign) * term;
        mag += std::abs(term);
    }
    res.value = total;
    res.method = DerivMethod::closed_form;
    res.error_estimate = detail::legendre_eps * mag;
    return res;
}

// [d/dmu P_{nu-1/2}^mu(z)]_{mu = +-m} =
//   Gamma(nu-m+1/2)/Gamma(nu -+ m+1/2) * { Q_{nu-1/2}^m(z)
//     + psi(nu -+ m+1/2) P_{nu-1/2}^m(z)
//     +- m! sum_{k=0}^{m-1} (-1)^{k-m} (z^2-1)^{(k-m)/2} / (2^{k-m+1} k!(m-k))
//            P_{nu+k-m-1/2}^k(z) }
inline DerivativeResult dp_dorder_at_int(const Complex& nu, int m, int sign, const Complex& z) {
    if (m < 0) throw domain_error("dp_dorder_at_int: m must be nonnegative");
    DerivativeResult res;
    res.region_checked = classify_region(z);
    if (!res.region_checked.in_cut_plane_minus_inf_1)
        throw domain_error("dp_dorder_at_int: argument on the cut (-inf, 1]");
    const Complex a_minus = nu - double(m) + 0.5;
    const Complex a_sign = (sign >= 0) ? a_minus : nu + double(m) + 0.5;
    if (near_nonpositive_integer(a_minus, 1e-10))
        throw pole_error("dp_dorder_at_int: pole of Gamma(nu - m + 1/2)");
    if (near_nonpositive_integer(a_sign, 1e-10))
        throw pole_error("dp_dorder_at_int: pole of Gamma(nu -+ m + 1/2)");
    Complex ratio = (sign >= 0) ? Complex(1.0, 0.0) : 1.0 / pochhammer(a_minus, 2 * m);
    Complex total = legendre_q(nu - 0.5, Complex(double(m), 0.0), z) +
                    digamma(a_sign) * legendre_p(nu - 0.5, Complex(double(m), 0.0), z);
    double mag = std::abs(total);
    double mfact = detail::factorial(m);
    for (int k = 0; k < m; ++k) {
        double sgn = ((m - k) % 2 == 0) ? 1.0 : -1.0;
        Complex coef = sgn * mfact * half_power(z, 0.5 * double(k - m)) /
                       (std::pow(2.0, double(k - m + 1)) * detail::factorial(k) *
                        double(m - k));
        Complex term = coef * legendre_p(nu + double(k - m) - 0.5, Complex(double(k), 0.0), z);
        total += double(sign) * term;
        mag += std::abs(term);
    }
    res.value = ratio * total;
    res.method = DerivMethod::closed_form;
    res.error_estimate = detail::legendre_eps * std::abs(ratio) * mag;
    return res;
}

// ---- finite-difference oracle ---------------------------------------------

enum class LegendreKind { P, Q };
enum class DerivWrt { degree, order };

// Richardson-extrapolated central difference of P or Q in the degree or the
// order.  Halves the step until the combined truncation/roundoff estimate
// drops below 1e-7 or the floor is reached, and reports the achieved error.
inline DerivativeResult fd_param_derivative(LegendreKind which, DerivWrt wrt,
                                            const LegendreParams& at, double h = 0.0) {
    DerivativeResult res;
    res.method = DerivMethod::finite_difference;
    res.region_checked = classify_region(at.argument);
    const Complex x0 = (wrt == DerivWrt::degree) ? at.degree : at.order;
    if (h <= 0.0) h = 1e-3 * std::max(1.0, std::abs(x0));

    auto eval = [&](const Complex& x) -> Complex {
        Complex nu = (wrt == DerivWrt::degree) ? x : at.degree;
        Complex mu = (wrt == DerivWrt::order) ? x : at.order;
        return (which == LegendreKind::P) ? legendre_p(nu, mu, at.argument)
                                          : legendre_q(nu, mu, at.argument);
    };

    constexpr int levels = 4;
    Complex R[levels][levels];
    double best_err = std::numeric_limits<double>::infinity();
    Complex best{0.0, 0.0};
    try {
        for (int j = 0; j < levels; ++j) {
            double hj = h / double(1 << j);
            R[j][0] = (eval(x0 + hj) - eval(x0 - hj)) / (2.0 * hj);
            for (int k = 1; k <= j; ++k) {
                double p4 = std::pow(4.0, k);
                R[j][k] = (p4 * R[j][k - 1] - R[j - 1][k - 1]) / (p4 - 1.0);
            }
            if (j > 0) {
                double err = std::abs(R[j][j] - R[j - 1][j - 1]);
                if (err < best_err) {
                    best_err = err;
                    best = R[j][j];
                }
                double scale = std::max(std::abs(R[j][j]), 1e-300);
                if (best_err < 1e-7 * std::max(1.0, scale)) break;
            }
        }
    } catch (const pole_error& e) {
        throw pole_error(std::string("fd_param_derivative: stencil crosses a pole: ") +
                         e.what());
    } catch (const domain_error& e) {
        throw domain_error(std::string("fd_param_derivative: stencil leaves the domain: ") +
                           e.what());
    }
    res.value = best;
    res.error_estimate = best_err;
    return res;
}

} // namespace alf

#endif
