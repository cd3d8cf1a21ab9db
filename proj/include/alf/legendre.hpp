// Associated Legendre functions P_nu^mu(z), Q_nu^mu(z) on the cut plane
// C \ (-inf, 1] for complex degree and order, plus the Whipple formulae.
//
// Evaluation strategy, chosen per argument region:
//   - hypergeometric series in (1-z)/2, or its Pfaff transform in
//     (z-1)/(z+1), wherever one of them converges at a useful rate;
//   - for Q at |z| >= 1.08, the 1/z^2 series;
//   - for Q in the right half of the unit neighbourhood, the Whipple
//     transform to P at z / sqrt(z^2 - 1);
//   - for P when no series converges but Re z > -1/2, the Laplace-type
//     K-Bessel integral with an order ladder;
//   - elsewhere, analytic continuation by Taylor stepping of the Legendre
//     ODE along an L-shaped path from a directly evaluable anchor.  The
//     path never touches the cut, so the continued element agrees with
//     the principal branch on its side of the axis.
//
// Degrees are first folded to Re nu >= -1/2 (P_{-nu-1} = P_nu exactly; Q by
// the connection formula, which for half-integer degrees collapses to
// Q_{-n-1/2} = Q_{n-1/2}).  Integer orders of P go through the exact
// Gamma-ratio relation to negative order, never through a numeric limit.

#ifndef ALF_LEGENDRE_HPP
#define ALF_LEGENDRE_HPP

#include <cmath>
#include <complex>

#include "alf/complex_kernel.hpp"
#include "alf/error.hpp"
#include "alf/gamma.hpp"
#include "alf/hyp2f1.hpp"
#include "alf/quadrature.hpp"
#include "alf/whipple_map.hpp"

namespace alf {

struct LegendreParams {
    Complex degree{0.0, 0.0};
    Complex order{0.0, 0.0};
    Complex argument{2.0, 0.0};
};

namespace detail {

Complex p_core(Complex nu, Complex mu, const Complex& z, int depth);
Complex q_core(Complex nu, Complex mu, const Complex& z, int depth);

inline void check_legendre_depth(int depth) {
    if (depth > 12)
        throw std::logic_error("legendre: internal dispatch recursion too deep");
}

// ---- hypergeometric representations -------------------------------------

// P via F(-nu, nu+1; 1-mu; (1-z)/2) or its Pfaff transform; caller
// guarantees 1-mu is away from nonpositive integers and one rate < 1.
inline Complex p_hyp(const Complex& nu, const Complex& mu, const Complex& z) {
    const Complex w = 0.5 * (1.0 - z);
    const Complex wp = (z - 1.0) / (z + 1.0);
    const Complex pref =
        std::exp(0.5 * mu * (std::log(z + 1.0) - std::log(z - 1.0))) * recip_gamma(1.0 - mu);
    if (std::abs(w) <= std::abs(wp))
        return pref * hyp2f1_series(-nu, nu + 1.0, 1.0 - mu, w);
    Complex f = hyp2f1_series(-nu, -mu - nu, 1.0 - mu, wp);
    return pref * std::pow(0.5 * (1.0 + z), nu) * f;
}

// Q via the 1/z^2 series, |z| > 1:
//   Q = e^{i mu pi} sqrt(pi) Gamma(nu+mu+1) (z^2-1)^{mu/2}
//       / (2^{nu+1} Gamma(nu+3/2) z^{nu+mu+1})
//       * F(1 + (nu+mu)/2, (1+nu+mu)/2; nu+3/2; 1/z^2)
inline Complex q_hyp_large(const Complex& nu, const Complex& mu, const Complex& z) {
    const Complex num = nu + mu;
    Complex F = hyp2f1_series(1.0 + 0.5 * num, 0.5 * (1.0 + num), nu + 1.5, 1.0 / (z * z));
    Complex pref = std::exp(Complex(0.0, pi) * mu) * std::sqrt(pi) * gamma_c(nu + mu + 1.0) *
                   recip_gamma(nu + 1.5) * half_power(z, 0.5 * mu) *
                   std::exp(-(nu + 1.0) * std::log(2.0) - (num + 1.0) * std::log(z));
    return pref * F;
}

// ---- P at large |z|: combination of the two 1/z^2 Q-series ----------------
//
// P_nu^mu = [sin(pi(nu+mu)) Q_nu^mu - sin(pi(nu-mu)) Q_{-nu-1}^mu]
//           / (pi e^{i mu pi} cos(pi nu)).
// The sin * Gamma(...) products are fused through the reflection formula into
// entire expressions, so parameter coincidences stay removable.  Returns
// false (leaving out untouched) when the degree sits near a half-integer
// (cos pi nu ~ 0, the series entangle) or when the two terms cancel badly.
inline bool p_large_combination(const Complex& nu, const Complex& mu, const Complex& z,
                                Complex& out) {
    Complex cn = cos_pi(nu);
    if (std::abs(cn) < 0.02 || std::abs(nu.imag()) > 3.5) return false;
    const Complex w = 1.0 / (z * z);
    const Complex hp = half_power(z, 0.5 * mu);
    const Complex lz = std::log(z), l2 = std::log(2.0);
    // sin(pi(nu+mu)) Gamma(nu+mu+1) = pi (nu+mu) / Gamma(1-nu-mu)
    Complex a = nu + mu;
    Complex F1 = hyp2f1_series(1.0 + 0.5 * a, 0.5 * (1.0 + a), nu + 1.5, w);
    Complex T1 = pi * a * recip_gamma(1.0 - a) * std::sqrt(pi) * recip_gamma(nu + 1.5) * hp *
                 std::exp(-(nu + 1.0) * l2 - (a + 1.0) * lz) * F1;
    // sin(pi(nu-mu)) Gamma(mu-nu) = -pi / Gamma(1+nu-mu)
    Complex b = mu - nu;
    Complex F2 = hyp2f1_series(0.5 * (b + 1.0), 0.5 * b, 0.5 - nu, w);
    Complex T2 = -pi * recip_gamma(1.0 + nu - mu) * std::sqrt(pi) * recip_gamma(0.5 - nu) * hp *
                 std::exp(nu * l2 - b * lz) * F2;
    Complex num = T1 - T2;
    if (std::abs(T1) + std::abs(T2) > 1e4 * std::abs(num)) return false;
    out = num / (pi * cn);
    return true;
}

// ---- P: Laplace K-integral route -----------------------------------------

// P_{nu'-1/2}^{-mu'}(z) = sqrt(2/pi) (z^2-1)^{mu'/2}
//     / (Gamma(mu'-nu'+1/2) Gamma(mu'+nu'+1/2)) int_0^inf e^{-zt} K_nu'(t) t^{mu'-1/2} dt;
// here with nu' = nu + 1/2 and mu' = -order, valid for Re z > -1 and
// Re mu' > |Re nu'| - 1/2.
inline Complex p_bessel_direct(const Complex& nu, const Complex& order, const Complex& z) {
    const Complex nup = nu + 0.5;
    const Complex mup = -order;
    IntegrandSpec spec;
    spec.bessel_kind = BesselKind::K;
    spec.bessel_order = nup;
    spec.power_exponent = mup;
    spec.decay_coefficient = z;
    auto I = laplace_bessel_integral(spec, 1e-12);
    if (!I.converged)
        throw convergence_error("legendre_p: Laplace integral route did not converge",
                                I.abs_error_estimate);
    Complex pref = std::sqrt(2.0 / pi) * half_power(z, 0.5 * mup) *
                   recip_gamma(mup - nup + 0.5) * recip_gamma(mup + nup + 0.5);
    return pref * I.value;
}

// Order ladder B^{s} = (nu - s + 2)(nu + s - 1) B^{s-2}
//                      - 2 (s - 1) z (z^2-1)^{-1/2} B^{s-1}
// (same recurrence for P and Q); raising the order is the stable direction.
inline Complex order_ladder(const Complex& nu, const Complex& z, Complex s_low,
                            Complex f_lowm1, Complex f_low, int steps) {
    Complex invsq = 1.0 / sqrt_prod(z);
    Complex fm2 = f_lowm1, fm1 = f_low;
    Complex s = s_low;
    for (int j = 0; j < steps; ++j) {
        s += 1.0;
        Complex f = (nu - s + 2.0) * (nu + s - 1.0) * fm2 - 2.0 * (s - 1.0) * z * invsq * fm1;
        fm2 = fm1;
        fm1 = f;
    }
    return fm1;
}

inline Complex p_bessel_route(const Complex& nu, const Complex& mu, const Complex& z) {
    const double sigma_max = 0.45 - std::abs(nu.real() + 0.5);
    int J = 0;
    if (mu.real() > sigma_max) J = static_cast<int>(std::ceil(mu.real() - sigma_max));
    if (J == 0) return p_bessel_direct(nu, mu, z);
    Complex s0 = mu - double(J);
    Complex f_lowm1 = p_bessel_direct(nu, s0 - 1.0, z);
    Complex f_low = p_bessel_direct(nu, s0, z);
    return order_ladder(nu, z, s0, f_lowm1, f_low, J);
}

// ---- analytic continuation by ODE Taylor stepping -------------------------

// One Taylor step of (1-z^2)^2 F'' - 2z(1-z^2) F' + [l(l+1)(1-z^2) - mu^2] F = 0
// from zc to zc + delta, |delta| well inside min(|zc-1|, |zc+1|).  Works
// with the scaled coefficients g_k = c_k delta^k, which stay bounded even
// when the convergence radius is tiny.
inline void ode_taylor_step(const Complex& lambda, const Complex& mu, const Complex& zc,
                            const Complex& delta, Complex& F, Complex& Fp) {
    const Complex p0 = 1.0 - zc * zc, p1 = -2.0 * zc, p2(-1.0, 0.0);
    const Complex ll = lambda * (lambda + 1.0);
    const Complex a0 = p0 * p0, a1 = 2.0 * p0 * p1, a2 = p1 * p1 + 2.0 * p0 * p2,
                  a3 = 2.0 * p1 * p2, a4 = p2 * p2;
    const Complex b0 = -2.0 * zc * p0, b1 = -2.0 * (p0 + zc * p1),
                  b2 = -2.0 * (p1 + zc * p2), b3 = -2.0 * p2;
    const Complex c0 = ll * p0 - mu * mu, c1 = ll * p1, c2 = ll * p2;

    constexpr int kmax = 120;
    Complex g[kmax + 2];
    g[0] = F;
    g[1] = Fp * delta;
    auto G = [&](int idx) { return (idx >= 0) ? g[idx] : Complex(0.0, 0.0); };
    const Complex d2 = delta * delta, d3 = d2 * delta, d4 = d2 * d2;
    Complex val = g[0] + g[1];
    Complex der = g[1]; // accumulates sum k g_k, i.e. delta * F'
    int top = 1;
    for (int n = 0; n + 2 <= kmax + 1; ++n) {
        Complex rhs =
            (a1 * double((n + 1) * n) + b0 * double(n + 1)) * G(n + 1) * delta +
            (a2 * double(n * (n - 1)) + b1 * double(n) + c0) * G(n) * d2 +
            (a3 * double((n - 1) * (n - 2)) + b2 * double(n - 1) + c1) * G(n - 1) * d3 +
            (a4 * double((n - 2) * (n - 3)) + b3 * double(n - 2) + c2) * G(n - 2) * d4;
        g[n + 2] = -rhs / (a0 * double((n + 2) * (n + 1)));
        val += g[n + 2];
        der += double(n + 2) * g[n + 2];
        top = n + 2;
        if (n >= 4 && std::abs(g[n + 2]) + std::abs(g[n + 1]) <
                          1e-18 * std::max(std::abs(val), 1e-300))
            break;
    }
    (void)top;
    F = val;
    Fp = der / delta;
}

// March F from z0 (with seeds F, F') to z_target along first a horizontal
// then a vertical leg, staying strictly on one side of the real axis.
inline Complex ode_march(const Complex& lambda, const Complex& mu, Complex zc, Complex F,
                         Complex Fp, const Complex& z_target) {
    auto advance_to = [&](const Complex& goal) {
        for (int it = 0; it < 4000; ++it) {
            Complex diff = goal - zc;
            double dist = std::abs(diff);
            if (dist == 0.0) return;
            double radius = std::min(std::abs(zc - 1.0), std::abs(zc + 1.0));
            double hop = std::min(0.42 * radius, dist);
            Complex delta = diff * (hop / dist);
            ode_taylor_step(lambda, mu, zc, delta, F, Fp);
            zc += delta;
            if (hop == dist) return;
        }
        throw convergence_error("legendre: ODE continuation exceeded its step budget", 1.0);
    };
    advance_to(Complex(z_target.real(), zc.imag()));
    advance_to(z_target);
    return F;
}

// derivative from the degree-raising relation:
// (z^2 - 1) F' = (nu - mu + 1) F_{nu+1} - (nu + 1) z F_nu
inline Complex legendre_derivative(const Complex& nu, const Complex& mu, const Complex& z,
                                   const Complex& f_nu, const Complex& f_nup1) {
    return ((nu - mu + 1.0) * f_nup1 - (nu + 1.0) * z * f_nu) / ((z + 1.0) * (z - 1.0));
}

inline Complex p_march(const Complex& nu, const Complex& mu, const Complex& z, int depth) {
    double sy = (z.imag() >= 0.0) ? 1.0 : -1.0;
    double Y = std::max(1.3, std::abs(z.imag()));
    Complex z0(0.3, sy * Y);
    Complex f0 = p_core(nu, mu, z0, depth + 1);
    Complex f1 = p_core(nu + 1.0, mu, z0, depth + 1);
    Complex fp = legendre_derivative(nu, mu, z0, f0, f1);
    return ode_march(nu, mu, z0, f0, fp, z);
}

inline Complex q_march(const Complex& nu, const Complex& mu, const Complex& z, int depth) {
    double sy = (z.imag() >= 0.0) ? 1.0 : -1.0;
    double Y = std::max(1.3, std::abs(z.imag()));
    Complex z0(0.3, sy * Y);
    Complex f0 = q_core(nu, mu, z0, depth + 1);
    Complex f1 = q_core(nu + 1.0, mu, z0, depth + 1);
    Complex fp = legendre_derivative(nu, mu, z0, f0, f1);
    return ode_march(nu, mu, z0, f0, fp, z);
}

// ---- Q in the unit neighbourhood, right half: Whipple transform ----------

inline Complex q_whipple_lens(const Complex& nu, const Complex& mu, const Complex& z,
                              int depth) {
    Complex w = f_map(z);
    Complex pw = p_core(-mu - 0.5, -nu - 0.5, w, depth + 1);
    return std::sqrt(0.5 * pi) * gamma_c(nu + mu + 1.0) * std::exp(Complex(0.0, pi) * mu) *
           half_power(z, Complex(-0.25, 0.0)) * pw;
}

// ---- dispatchers ----------------------------------------------------------

inline Complex p_core(Complex nu, Complex mu, const Complex& z, int depth) {
    check_legendre_depth(depth);
    // degree fold: P_{-nu-1} = P_nu
    if (nu.real() < -0.5) nu = -nu - 1.0;

    // positive integer order: exact Gamma-ratio relation to negative order
    if (mu.real() > 0.5) {
        double mr = std::round(mu.real());
        Complex dist = mu - mr;
        if (std::abs(dist) <= 1e-12) {
            int m = static_cast<int>(mr);
            Complex ratio = pochhammer(nu - double(m) + 1.0, 2 * m);
            if (ratio == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
            return ratio * p_core(nu, Complex(-double(m), 0.0), z, depth + 1);
        }
        if (std::abs(dist) < 0.08) {
            // near-integer order: route around the Gamma(1-mu) spike
            Complex ratio = gamma_c(nu + mu + 1.0) * recip_gamma(nu - mu + 1.0);
            Complex pneg = p_core(nu, -mu, z, depth + 1);
            Complex q = q_core(nu, mu, z, depth + 1);
            return ratio * pneg +
                   (2.0 / pi) * std::exp(Complex(0.0, -pi) * mu) * sin_pi(mu) * q;
        }
    }

    const double r_series = 0.5 * std::abs(1.0 - z);
    const double r_pfaff = std::abs((z - 1.0) / (z + 1.0));
    if (std::min(r_series, r_pfaff) <= 0.92) return p_hyp(nu, mu, z);
    if (std::abs(z) >= 1.08) {
        Complex out;
        if (p_large_combination(nu, mu, z, out)) return out;
    }
    if (z.real() >= -0.5) return p_bessel_route(nu, mu, z);
    return p_march(nu, mu, z, depth);
}

inline Complex q_core(Complex nu, Complex mu, const Complex& z, int depth) {
    check_legendre_depth(depth);
    if (nu.real() < -0.5) {
        // fold the degree: Q_{-nu'-1} in terms of nu' = -nu-1
        Complex nup = -nu - 1.0;
        if (near_integer(nu + 0.5, 1e-12)) {
            nu = nup; // exact half-integer symmetry Q_{-n-1/2} = Q_{n-1/2}
        } else {
            Complex s2 = sin_pi(nup - mu);
            if (std::abs(s2) < 1e-8) {
                // nup - mu integral: if it is >= 0 then Gamma(nu + mu + 1) =
                // Gamma(mu - nup) sits on a pole and Q itself is singular;
                // otherwise Q is finite but the reflection degenerates, so
                // fall back to the direct series when its c-parameter allows
                double k = std::round((nup - mu).real());
                if (k >= -0.5)
                    throw pole_error("legendre_q: pole of Gamma(nu + mu + 1)");
                bool c_ok = !(std::abs(nu.imag()) < 0.2 &&
                              std::abs(nu.real() + 1.5 - std::round(nu.real() + 1.5)) < 0.2 &&
                              nu.real() + 1.5 < 0.5);
                if (c_ok && std::abs(z) >= 1.08) return q_hyp_large(nu, mu, z);
                throw pole_error(
                    "legendre_q: degenerate degree reflection (nu - mu integral) at Re nu < -1/2");
            }
            Complex s1 = sin_pi(nup + mu);
            Complex c = cos_pi(nup);
            Complex qv = q_core(nup, mu, z, depth + 1);
            Complex pv = p_core(nup, mu, z, depth + 1);
            return (s1 * qv - pi * std::exp(Complex(0.0, pi) * mu) * c * pv) / s2;
        }
    }
    if (near_nonpositive_integer(nu + mu + 1.0, 1e-12))
        throw pole_error("legendre_q: pole of Gamma(nu + mu + 1)");

    if (std::abs(z) >= 1.08) return q_hyp_large(nu, mu, z);
    if (z.real() > 0.02) return q_whipple_lens(nu, mu, z, depth);
    return q_march(nu, mu, z, depth);
}

} // namespace detail

// P_nu^mu(z) on C \ (-inf, 1].
inline Complex legendre_p(const Complex& nu, const Complex& mu, const Complex& z) {
    require_finite(nu, "legendre_p degree");
    require_finite(mu, "legendre_p order");
    require_finite(z, "legendre_p argument");
    if (on_cut_inf_1(z))
        throw domain_error("legendre_p: argument on the cut (-inf, 1]");
    return detail::p_core(nu, mu, z, 0);
}

// Q_nu^mu(z) on C \ (-inf, 1].
inline Complex legendre_q(const Complex& nu, const Complex& mu, const Complex& z) {
    require_finite(nu, "legendre_q degree");
    require_finite(mu, "legendre_q order");
    require_finite(z, "legendre_q argument");
    if (on_cut_inf_1(z))
        throw domain_error("legendre_q: argument on the cut (-inf, 1]");
    return detail::q_core(nu, mu, z, 0);
}

inline Complex legendre_p(const LegendreParams& p) {
    return legendre_p(p.degree, p.order, p.argument);
}
inline Complex legendre_q(const LegendreParams& p) {
    return legendre_q(p.degree, p.order, p.argument);
}

// P_{-mu-1/2}^{-nu-1/2}(z / sqrt(z^2-1)) computed from Q_nu^mu(z):
//   sqrt(2/pi) (z^2-1)^{1/4} e^{-i mu pi} / Gamma(nu+mu+1) * Q_nu^mu(z),
// valid for Re z > 0.
inline Complex whipple_p_from_q(const Complex& nu, const Complex& mu, const Complex& z) {
    if (!(z.real() > 0.0))
        throw domain_error("whipple_p_from_q: requires Re z > 0");
    if (is_nonpositive_integer(nu + mu + 1.0) ||
        near_nonpositive_integer(nu + mu + 1.0, 1e-12))
        throw pole_error("whipple_p_from_q: pole of Gamma(nu + mu + 1)");
    Complex q = legendre_q(nu, mu, z);
    return std::sqrt(2.0 / pi) * half_power(z, Complex(0.25, 0.0)) *
           std::exp(Complex(0.0, -pi) * mu) * recip_gamma(nu + mu + 1.0) * q;
}

// Q_{-mu-1/2}^{-nu-1/2}(z / sqrt(z^2-1)) computed from P_nu^mu(z):
//   -i sqrt(pi/2) Gamma(-nu-mu) (z^2-1)^{1/4} e^{-i nu pi} * P_nu^mu(z),
// valid for Re z > 0.
inline Complex whipple_q_from_p(const Complex& nu, const Complex& mu, const Complex& z) {
    if (!(z.real() > 0.0))
        throw domain_error("whipple_q_from_p: requires Re z > 0");
    if (near_nonpositive_integer(-nu - mu, 1e-12))
        throw pole_error("whipple_q_from_p: pole of Gamma(-nu - mu)");
    Complex p = legendre_p(nu, mu, z);
    return Complex(0.0, -1.0) * std::sqrt(0.5 * pi) * gamma_c(-nu - mu) *
           half_power(z, Complex(0.25, 0.0)) * std::exp(Complex(0.0, -pi) * nu) * p;
}

} // namespace alf

#endif
