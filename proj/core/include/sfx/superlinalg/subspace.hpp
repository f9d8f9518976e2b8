#ifndef SFX_SUPERLINALG_SUBSPACE_HPP
#define SFX_SUPERLINALG_SUBSPACE_HPP

#include <cstddef>
#include <vector>

#include "sfx/superlinalg/matrix.hpp"
#include "sfx/superlinalg/superspace.hpp"

namespace sfx {

// A subspace kept as the RREF of a spanning set.
class Subspace {
public:
    Subspace() = default;

    static Subspace span(const SuperSpace& ambient, const std::vector<Vector>& vectors);
    static Subspace zero(const SuperSpace& ambient);
    static Subspace whole(const SuperSpace& ambient);
    static Subspace coordinate(const SuperSpace& ambient, const std::vector<std::size_t>& indices);

    const SuperSpace& ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vector vector(std::size_t k) const { return basis_.row(k); }
    std::vector<Vector> vectors() const { return basis_.row_vectors(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Canonical basis indices not used as pivots; their span is a complement.
    std::vector<std::size_t> complement_indices() const;

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    // True iff the subspace equals the sum of its even and odd parts.
    bool is_homogeneous() const;
    // Smallest homogeneous subspace containing this one.
    Subspace homogeneous_closure() const;

    Subspace intersect(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;

    // Reduce v modulo this subspace: clears every pivot coordinate.
    Vector reduce(const Vector& v) const;
    // Coordinates of v in the RREF basis; throws std::domain_error when v is not contained.
    Vector coordinates(const Vector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    SuperSpace ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

// Even and odd components of v.
Vector even_part(const SuperSpace& space, const Vector& v);
Vector odd_part(const SuperSpace& space, const Vector& v);

}  // namespace sfx

#endif
