#ifndef ALF_ERROR_HPP
#define ALF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace alf {

// Argument outside the domain of a function (on a branch cut, t <= 0, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A gamma-function prefactor degenerates and no finite limit path exists.
struct pole_error : domain_error {
    using domain_error::domain_error;
};

// A convergence precondition of an integral representation is violated.
// The message names the violated inequality.
struct constraint_error : domain_error {
    using domain_error::domain_error;
};

// Result exceeds the double exponent range.
struct overflow_error : std::range_error {
    using std::range_error::range_error;
};

// An adaptive scheme exhausted its budget; carries the best estimate so far.
struct convergence_error : std::runtime_error {
    convergence_error(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_error(achieved) {}
    double achieved_error;
};

} // namespace alf

#endif
