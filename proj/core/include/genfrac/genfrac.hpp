#ifndef GENFRAC_GENFRAC_HPP_
#define GENFRAC_GENFRAC_HPP_

#include "genfrac/combinatorics/delta.hpp"
#include "genfrac/error.hpp"
#include "genfrac/format.hpp"
#include "genfrac/mellin/mellin.hpp"
#include "genfrac/numerics/differentiate.hpp"
#include "genfrac/numerics/gamma.hpp"
#include "genfrac/numerics/quadrature.hpp"
#include "genfrac/numerics/taylor.hpp"
#include "genfrac/operators/classical.hpp"
#include "genfrac/operators/fractional.hpp"
#include "genfrac/operators/order.hpp"
#include "genfrac/operators/test_function.hpp"

#endif  // GENFRAC_GENFRAC_HPP_
