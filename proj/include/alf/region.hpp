// Convergence-region predicates for the integral representations.  All four
// flags are evaluated through f_map; a point sitting on a cut (within
// cut_tolerance) reports false for the corresponding cut-plane predicate.

#ifndef ALF_REGION_HPP
#define ALF_REGION_HPP

#include <cmath>

#include "alf/complex_kernel.hpp"
#include "alf/whipple_map.hpp"

namespace alf {

struct RegionVerdict {
    bool in_cut_plane_minus_inf_1 = false; // z in C \ (-inf, 1]
    bool in_cut_plane_pm1 = false;         // z in C \ [-1, 1]
    bool re_f_positive = false;            // Re f(z) > 0
    bool re_f_gt_one = false;              // Re f(z) > 1
    double distance_to_nearest_cut = 0.0;  // distance to (-inf, 1]
};

inline RegionVerdict classify_region(const Complex& z) {
    RegionVerdict v;
    v.distance_to_nearest_cut = distance_to_cut_inf_1(z);
    v.in_cut_plane_minus_inf_1 = !on_cut_inf_1(z);
    v.in_cut_plane_pm1 = !on_cut_pm1(z);
    if (!v.in_cut_plane_pm1) return v;
    // Re f is invariant under z -> -z (evenness) and z -> conj z, so fold
    // into closed quadrant I before comparing against the boundary curve
    // Re f = 1.
    Complex folded(std::abs(z.real()), std::abs(z.imag()));
    double re_f = f_map(folded).real();
    v.re_f_positive = re_f > 0.0;
    v.re_f_gt_one = re_f > 1.0;
    return v;
}

} // namespace alf

#endif
