// Complex gamma, reciprocal gamma and digamma.
//
// Gamma uses the 15-term Lanczos rational approximation (g = 607/128) on the
// right half-plane and the reflection formula for Re z < 1/2.  Digamma uses
// the Stirling tail after an upward recurrence push, with the same
// reflection layout.

#ifndef ALF_GAMMA_HPP
#define ALF_GAMMA_HPP

#include <array>
#include <cmath>
#include <complex>

#include "alf/complex_kernel.hpp"
#include "alf/error.hpp"

namespace alf {

namespace detail {

inline constexpr double lanczos_g = 4.7421875; // 607/128

inline constexpr std::array<double, 15> lanczos_c = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// sin(pi z), cos(pi z) with the argument reduced modulo 1 before scaling by
// pi, so accuracy survives near the zeros at integer z.
inline Complex sin_pi(const Complex& z) {
    double r = std::round(z.real());
    Complex s(z.real() - r, z.imag());
    Complex v = std::sin(pi * s);
    return (static_cast<long long>(r) % 2 == 0) ? v : -v;
}

inline Complex cos_pi(const Complex& z) {
    double r = std::round(z.real());
    Complex s(z.real() - r, z.imag());
    Complex v = std::cos(pi * s);
    return (static_cast<long long>(r) % 2 == 0) ? v : -v;
}

// Lanczos sum; valid for Re z >= 0.5.
inline Complex gamma_right(const Complex& z) {
    Complex a(lanczos_c[0], 0.0);
    for (int k = 1; k < 15; ++k) a += lanczos_c[k] / (z - 1.0 + double(k));
    Complex t = z + (lanczos_g - 0.5);
    return std::sqrt(2.0 * pi) * std::pow(t, z - 0.5) * std::exp(-t) * a;
}

} // namespace detail

inline bool is_nonpositive_integer(const Complex& z) {
    return z.imag() == 0.0 && z.real() <= 0.0 &&
           z.real() == std::round(z.real());
}

struct GammaValue {
    Complex value{0.0, 0.0};
    bool at_pole = false;
};

inline GammaValue gamma(const Complex& z) {
    if (is_nonpositive_integer(z)) return {Complex(0.0, 0.0), true};
    if (z.real() >= 0.5) return {detail::gamma_right(z), false};
    // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
    Complex denom = detail::sin_pi(z) * detail::gamma_right(1.0 - z);
    return {pi / denom, false};
}

// Plain value of Gamma; the caller must know z is off the pole set.
inline Complex gamma_c(const Complex& z) { return gamma(z).value; }

// 1/Gamma, entire; exactly zero at nonpositive integers.
inline Complex recip_gamma(const Complex& z) {
    if (is_nonpositive_integer(z)) return Complex(0.0, 0.0);
    if (z.real() >= 0.5) return 1.0 / detail::gamma_right(z);
    return detail::sin_pi(z) * detail::gamma_right(1.0 - z) / pi;
}

inline Complex digamma(const Complex& z) {
    if (is_nonpositive_integer(z))
        throw pole_error("digamma: pole at nonpositive integer");
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        Complex cot = detail::cos_pi(z) / detail::sin_pi(z);
        return digamma(1.0 - z) - pi * cot;
    }
    Complex w = z;
    Complex acc(0.0, 0.0);
    while (w.real() < 10.0) {
        acc -= 1.0 / w;
        w += 1.0;
    }
    // Stirling tail
    Complex inv = 1.0 / w;
    Complex inv2 = inv * inv;
    Complex s = std::log(w) - 0.5 * inv;
    Complex p = inv2;
    s -= p / 12.0;
    p *= inv2;
    s += p / 120.0;
    p *= inv2;
    s -= p / 252.0;
    p *= inv2;
    s += p / 240.0;
    p *= inv2;
    s -= p / 132.0;
    p *= inv2;
    s += p * (691.0 / 32760.0);
    p *= inv2;
    s -= p / 12.0;
    return acc + s;
}

// psi(a)/Gamma(a) = -d/da [1/Gamma(a)]: entire, finite at the poles of both
// factors, where it equals -(-1)^k k! for a = -k.
inline Complex psi_over_gamma(const Complex& a) {
    if (a.real() >= 0.5) return digamma(a) * recip_gamma(a);
    if (is_nonpositive_integer(a)) {
        double k = -a.real();
        double f = 1.0;
        for (double j = 2.0; j <= k; ++j) f *= j;
        return Complex((static_cast<long long>(k) % 2 == 0) ? -f : f, 0.0);
    }
    Complex g1 = gamma_c(1.0 - a);
    return g1 * (detail::sin_pi(a) * digamma(1.0 - a) - pi * detail::cos_pi(a)) / pi;
}

// (a)_n = a (a+1) ... (a+n-1); exact product form so removable zero/pole
// pairs in gamma ratios cancel without catastrophe.
inline Complex pochhammer(const Complex& a, int n) {
    Complex p(1.0, 0.0);
    for (int j = 0; j < n; ++j) p *= a + double(j);
    return p;
}

// Gamma(a)/Gamma(b) through values; safe while |Gamma| stays in range and b
// is allowed to sit on a pole (ratio -> 0).
inline Complex gamma_ratio(const Complex& a, const Complex& b) {
    return gamma_c(a) * recip_gamma(b);
}

} // namespace alf

#endif
