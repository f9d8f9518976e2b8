#ifndef SFX_SUPERLINALG_HPP
#define SFX_SUPERLINALG_HPP

#include "sfx/superlinalg/format.hpp"
#include "sfx/superlinalg/graded_map.hpp"
#include "sfx/superlinalg/linsolve.hpp"
#include "sfx/superlinalg/matrix.hpp"
#include "sfx/superlinalg/parity.hpp"
#include "sfx/superlinalg/permutation.hpp"
#include "sfx/superlinalg/scalar.hpp"
#include "sfx/superlinalg/subspace.hpp"
#include "sfx/superlinalg/superspace.hpp"

#endif
