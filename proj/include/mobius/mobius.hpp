#pragma once

// Umbrella header: the full library.

#include "mobius/abelian.hpp"
#include "mobius/claims.hpp"
#include "mobius/crossed_product.hpp"
#include "mobius/errors.hpp"
#include "mobius/foliation.hpp"
#include "mobius/function_matrix.hpp"
#include "mobius/grid.hpp"
#include "mobius/group_algebra.hpp"
#include "mobius/half_line.hpp"
#include "mobius/ktheory.hpp"
#include "mobius/real_line_function.hpp"
#include "mobius/traces.hpp"
