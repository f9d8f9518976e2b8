#include "sfx/superlinalg/format.hpp"

#include <stdexcept>

namespace sfx {

std::string format_combination(const std::vector<std::string>& names, const Vector& v) {
    if (names.size() != v.size()) throw std::invalid_argument("format_combination: length mismatch");
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        Scalar mag = abs(v[i]);
        if (out.empty())
            out += sgn(v[i]) < 0 ? "-" : "";
        else
            out += sgn(v[i]) < 0 ? " - " : " + ";
        if (mag != 1) out += to_string(mag) + " ";
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

std::string format_combination(const SuperSpace& space, const Vector& v) {
    return format_combination(space.labels(), v);
}

}  // namespace sfx
