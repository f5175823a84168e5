#pragma once

// Umbrella header for the whole library.

#include "permext/error.hpp"
#include "permext/field.hpp"
#include "permext/linalg.hpp"
#include "permext/linear_ext.hpp"
#include "permext/oracle.hpp"
#include "permext/permutation.hpp"
#include "permext/projective.hpp"
#include "permext/reps.hpp"
