#ifndef ALF_ALF_HPP
#define ALF_ALF_HPP

#include "alf/bessel.hpp"
#include "alf/complex_kernel.hpp"
#include "alf/error.hpp"
#include "alf/gamma.hpp"
#include "alf/legendre.hpp"
#include "alf/param_derivatives.hpp"
#include "alf/quadrature.hpp"
#include "alf/region.hpp"
#include "alf/whipple_map.hpp"

#endif
