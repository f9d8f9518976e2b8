#ifndef SFX_SYMPLECTIC_HPP
#define SFX_SYMPLECTIC_HPP

#include "sfx/symplectic/form.hpp"
#include "sfx/symplectic/reduction.hpp"

#endif
