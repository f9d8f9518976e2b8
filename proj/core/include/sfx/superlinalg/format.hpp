#ifndef SFX_SUPERLINALG_FORMAT_HPP
#define SFX_SUPERLINALG_FORMAT_HPP

#include <string>

#include "sfx/superlinalg/matrix.hpp"
#include "sfx/superlinalg/superspace.hpp"

namespace sfx {

// "e3 + 2 L2*", "1/2 e1 - pi(L1*)", "0"; terms in basis order.
std::string format_combination(const SuperSpace& space, const Vector& v);

// Same, with caller-supplied term names.
std::string format_combination(const std::vector<std::string>& names, const Vector& v);

}  // namespace sfx

#endif
