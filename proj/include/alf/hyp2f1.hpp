// Gauss hypergeometric series 2F1(a, b; c; w) by direct summation, with the
// Pfaff transformation available to the Legendre dispatch.  Callers are
// responsible for keeping c away from nonpositive integers and |w| < 1;
// the Legendre representations are arranged so both always hold.

#ifndef ALF_HYP2F1_HPP
#define ALF_HYP2F1_HPP

#include <complex>

#include "alf/complex_kernel.hpp"
#include "alf/error.hpp"

namespace alf::detail {

inline Complex hyp2f1_series(const Complex& a, const Complex& b, const Complex& c,
                             const Complex& w, int max_terms = 20000) {
    if (std::abs(w) >= 0.985)
        throw convergence_error("hyp2f1_series: argument too close to the unit circle", 1.0);
    Complex sum(1.0, 0.0);
    Complex term(1.0, 0.0);
    int small_count = 0;
    for (int k = 0; k < max_terms; ++k) {
        term *= (a + double(k)) * (b + double(k)) * w / ((c + double(k)) * double(k + 1));
        sum += term;
        if (term == Complex(0.0, 0.0)) break; // terminating (polynomial) case
        if (std::abs(term) < 1e-17 * std::abs(sum)) {
            if (++small_count >= 2) break;
        } else {
            small_count = 0;
        }
    }
    return sum;
}

} // namespace alf::detail

#endif
