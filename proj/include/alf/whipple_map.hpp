// The map f(z) = z / (sqrt(z+1) sqrt(z-1)), the involution
// w(z) = log coth(z/2), the boundary curve Re f = 1 traced by f(1 - i t),
// and its distinguished points A, B, C.

#ifndef ALF_WHIPPLE_MAP_HPP
#define ALF_WHIPPLE_MAP_HPP

#include <cmath>
#include <complex>

#include "alf/complex_kernel.hpp"
#include "alf/error.hpp"

namespace alf {

// f(z) = z / (sqrt(z+1) sqrt(z-1)).  Even on C \ [-1,1]; the signed zero of
// Im z picks the side on (-1,1), where f(x +- i0) = -+ i x / sqrt(1 - x^2).
inline Complex f_map(const Complex& z) {
    if (z == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
    return z / sqrt_prod(z);
}

// w(z) = log coth(z/2), principal log.  Periodic with period 2 pi i;
// an involution on the strip |Im z| < pi.  Undefined on the rays
// {Re z <= 0, Im z = 2 pi n} where coth(z/2) lands on (-inf, 0] or blows up.
inline Complex w_map(const Complex& z) {
    double im_mod = std::remainder(z.imag(), 2.0 * pi);
    if (z.real() <= 0.0 && std::abs(im_mod) <= cut_tolerance)
        throw domain_error("w_map: z on an excluded ray Re z <= 0, Im z = 2 pi n");
    if (z.real() > 20.0) {
        // coth(z/2) = 1 + 2 e^{-z} / (1 - e^{-z}); log1p form avoids the
        // cancellation in log(coth) once coth is within 1e-9 of 1.
        Complex e = std::exp(-z);
        Complex r = 2.0 * e / (1.0 - e);
        // complex log1p: series for tiny r, std::log otherwise
        if (std::abs(r) < 1e-4)
            return r * (1.0 - r * (0.5 - r * (1.0 / 3.0 - r * 0.25)));
        return std::log(1.0 + r);
    }
    return std::log(std::cosh(0.5 * z) / std::sinh(0.5 * z));
}

struct BoundaryCurvePoint {
    double t = 0.0;      // parameter of z = 1 - i t
    double x = 0.0;      // Re f(1 - i t)
    double y = 0.0;      // Im f(1 - i t)
    double dist_sq = 0.0; // x^2 + y^2 = (1 + t^2) / (t sqrt(4 + t^2))
};

// Closed-form curve coordinates; stable down to t -> 0+ where direct
// evaluation of f(1 - i t) cancels.
inline BoundaryCurvePoint boundary_curve(double t) {
    if (!(t > 0.0)) throw domain_error("boundary_curve: t must be positive");
    double s = std::sqrt(4.0 + t * t);
    double d = 2.0 * std::sqrt(t * (4.0 + t * t));
    double rp = std::sqrt(s + 2.0);
    double rm = std::sqrt(s - 2.0);
    BoundaryCurvePoint p;
    p.t = t;
    p.x = ((1.0 + t) * rp + (t - 1.0) * rm) / d;
    p.y = ((1.0 - t) * rp + (t + 1.0) * rm) / d;
    p.dist_sq = (1.0 + t * t) / (t * s);
    return p;
}

struct SpecialPoints {
    BoundaryCurvePoint A; // closest point to the origin, t = sqrt(2)
    BoundaryCurvePoint B; // minimal Re, t = 2/sqrt(3)
    BoundaryCurvePoint C; // Re = 1, t = sqrt(sqrt(5) - 2)
};

inline SpecialPoints special_points() {
    SpecialPoints s;
    s.A = boundary_curve(std::sqrt(2.0));
    s.B = boundary_curve(2.0 / std::sqrt(3.0));
    s.C = boundary_curve(std::sqrt(std::sqrt(5.0) - 2.0));
    return s;
}

// Leading behaviour of f near z = 1: f(1 + eps e^{i phi}) ~ (2 eps)^{-1/2} e^{-i phi/2}.
inline Complex asymptotic_near_one(double epsilon, double phi) {
    if (!(epsilon > 0.0))
        throw domain_error("asymptotic_near_one: epsilon must be positive");
    return std::polar(1.0 / std::sqrt(2.0 * epsilon), -0.5 * phi);
}

// Leading behaviour of f at infinity: f(R e^{i phi}) ~ 1 + e^{-2 i phi} / (2 R^2).
inline Complex asymptotic_at_infinity(double R, double phi) {
    return 1.0 + std::polar(1.0 / (2.0 * R * R), -2.0 * phi);
}

} // namespace alf

#endif
