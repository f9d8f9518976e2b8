#ifndef SFX_SUPERLINALG_SCALAR_HPP
#define SFX_SUPERLINALG_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sfx {

// Exact rational, always kept in lowest terms with a positive denominator.
using Scalar = mpq_class;

// Accepts "n", "-n", "p/q" (optional sign). Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);

// Canonical "p/q" or "n" form; inverse of parse_scalar.
std::string to_string(const Scalar& q);

inline Scalar signed_one(int sign) { return Scalar(sign < 0 ? -1 : 1); }

}  // namespace sfx

#endif
