#ifndef SFX_DOUBLEEXT_HPP
#define SFX_DOUBLEEXT_HPP

#include "sfx/doubleext/extension.hpp"
#include "sfx/doubleext/model.hpp"

#endif
