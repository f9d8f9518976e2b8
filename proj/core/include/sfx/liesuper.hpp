#ifndef SFX_LIESUPER_HPP
#define SFX_LIESUPER_HPP

#include "sfx/liesuper/algebra.hpp"
#include "sfx/liesuper/structure.hpp"

#endif
