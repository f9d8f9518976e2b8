#ifndef SFX_COHOMOLOGY_HPP
#define SFX_COHOMOLOGY_HPP

#include "sfx/cohomology/cochain.hpp"
#include "sfx/cohomology/operators.hpp"

#endif
