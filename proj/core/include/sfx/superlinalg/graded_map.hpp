#ifndef SFX_SUPERLINALG_GRADED_MAP_HPP
#define SFX_SUPERLINALG_GRADED_MAP_HPP

#include <optional>

#include "sfx/superlinalg/matrix.hpp"
#include "sfx/superlinalg/superspace.hpp"

namespace sfx {

// Linear map source -> target; matrix is target.dim() x source.dim().
class GradedLinearMap {
public:
    GradedLinearMap() = default;
    GradedLinearMap(SuperSpace source, SuperSpace target, Matrix matrix);

    static GradedLinearMap identity(const SuperSpace& space);
    static GradedLinearMap zero(const SuperSpace& source, const SuperSpace& target);

    const SuperSpace& source() const { return source_; }
    const SuperSpace& target() const { return target_; }
    const Matrix& matrix() const { return m_; }

    // Parity-preserving and parity-reversing components; they sum to the map.
    GradedLinearMap even_part() const;
    GradedLinearMap odd_part() const;
    // Set when the map equals one of its parts (the zero map reports Even).
    std::optional<Parity> parity() const;

    Vector apply(const Vector& v) const { return m_.apply(v); }
    GradedLinearMap compose(const GradedLinearMap& inner) const;  // this o inner

private:
    SuperSpace source_;
    SuperSpace target_;
    Matrix m_;
};

}  // namespace sfx

#endif
