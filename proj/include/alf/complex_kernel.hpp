// Principal-branch complex primitives shared by every other header.
//
// All fractional powers of z^2 - 1 in this library are understood as
//     (z^2 - 1)^a := (z + 1)^a * (z - 1)^a
// with each factor on its principal branch (arg in (-pi, pi]).  The two
// conventions differ for Re z < 0, and the identities implemented in
// legendre.hpp and param_derivatives.hpp hold only for this one.

#ifndef ALF_COMPLEX_KERNEL_HPP
#define ALF_COMPLEX_KERNEL_HPP

#include <cmath>
#include <complex>
#include <string>

#include "alf/error.hpp"

namespace alf {

using Complex = std::complex<double>;

// Points closer than this to a branch-cut segment count as lying on it.
inline constexpr double cut_tolerance = 1e-13;

inline constexpr double pi = 3.14159265358979323846;

inline bool is_finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Checked-context constructor guard: rejects NaN/Inf components.
inline Complex require_finite(const Complex& z, const char* name) {
    if (!is_finite(z))
        throw domain_error(std::string(name) + ": non-finite value");
    return z;
}

// Distance from z to the half-line (-inf, 1] on the real axis.
inline double distance_to_cut_inf_1(const Complex& z) {
    if (z.real() <= 1.0) return std::abs(z.imag());
    return std::hypot(z.real() - 1.0, z.imag());
}

// Distance from z to the segment [-1, 1] on the real axis.
inline double distance_to_cut_pm1(const Complex& z) {
    if (std::abs(z.real()) <= 1.0) return std::abs(z.imag());
    return std::hypot(std::abs(z.real()) - 1.0, z.imag());
}

inline bool on_cut_inf_1(const Complex& z) {
    return distance_to_cut_inf_1(z) <= cut_tolerance;
}

inline bool on_cut_pm1(const Complex& z) {
    return distance_to_cut_pm1(z) <= cut_tolerance;
}

// sqrt(z+1)*sqrt(z-1), each square root principal.  Not equal to the
// principal sqrt(z^2-1) for Re z < 0.  The signed zero of Im z selects
// the side of the cut [-1, 1].
inline Complex sqrt_prod(const Complex& z) {
    if (std::abs(z - Complex(1.0, 0.0)) <= cut_tolerance ||
        std::abs(z + Complex(1.0, 0.0)) <= cut_tolerance)
        throw domain_error("sqrt_prod: z = +-1 is a branch point");
    return std::sqrt(z + 1.0) * std::sqrt(z - 1.0);
}

// (z+1)^a * (z-1)^a with principal logs.  half_power(z, 1/2) delegates to
// sqrt_prod so the two agree bitwise.
inline Complex half_power(const Complex& z, const Complex& alpha) {
    if (std::abs(z - Complex(1.0, 0.0)) <= cut_tolerance ||
        std::abs(z + Complex(1.0, 0.0)) <= cut_tolerance)
        throw domain_error("half_power: z = +-1 is a branch point");
    if (alpha == Complex(0.5, 0.0)) return sqrt_prod(z);
    if (alpha == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
    if (alpha == Complex(1.0, 0.0)) return (z + 1.0) * (z - 1.0);
    return std::exp(alpha * std::log(z + 1.0)) *
           std::exp(alpha * std::log(z - 1.0));
}

inline bool near_integer(const Complex& z, double tol = 1e-12) {
    return std::abs(z.imag()) <= tol &&
           std::abs(z.real() - std::round(z.real())) <= tol;
}

// True if z is within tol of the set {0, -1, -2, ...}.
inline bool near_nonpositive_integer(const Complex& z, double tol = 1e-12) {
    return near_integer(z, tol) && z.real() < 0.5;
}

} // namespace alf

#endif
