#include "sfx/superlinalg/subspace.hpp"

#include <stdexcept>

#include "sfx/superlinalg/linsolve.hpp"

namespace sfx {

Subspace Subspace::span(const SuperSpace& ambient, const std::vector<Vector>& vectors) {
    Subspace s;
    s.ambient_ = ambient;
    Echelon e = rref(Matrix::from_rows(vectors, ambient.dim()));
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::zero(const SuperSpace& ambient) { return span(ambient, {}); }

Subspace Subspace::whole(const SuperSpace& ambient) {
    std::vector<Vector> v;
    for (std::size_t i = 0; i < ambient.dim(); ++i) v.push_back(unit_vector(ambient.dim(), i));
    return span(ambient, v);
}

Subspace Subspace::coordinate(const SuperSpace& ambient, const std::vector<std::size_t>& indices) {
    std::vector<Vector> v;
    for (auto i : indices) v.push_back(unit_vector(ambient.dim(), i));
    return span(ambient, v);
}

std::vector<std::size_t> Subspace::complement_indices() const {
    std::vector<bool> used(ambient_.dim(), false);
    for (auto p : pivots_) used[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i]) out.push_back(i);
    return out;
}

Vector Subspace::reduce(const Vector& v) const {
    if (v.size() != ambient_.dim()) throw std::invalid_argument("vector not in ambient space");
    Vector r = v;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        Scalar c = r[pivots_[k]];
        if (sgn(c) != 0) axpy(r, -c, basis_.row(k));
    }
    return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t k = 0; k < other.dim(); ++k)
        if (!contains(other.vector(k))) return false;
    return true;
}

Vector Subspace::coordinates(const Vector& v) const {
    if (!contains(v)) throw std::domain_error("vector is not in the subspace");
    Vector c(dim());
    for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
    return c;
}

Vector even_part(const SuperSpace& space, const Vector& v) {
    Vector r = v;
    for (std::size_t i = 0; i < space.dim(); ++i)
        if (space.parity(i) == Parity::Odd) r[i] = 0;
    return r;
}

Vector odd_part(const SuperSpace& space, const Vector& v) {
    Vector r = v;
    for (std::size_t i = 0; i < space.dim(); ++i)
        if (space.parity(i) == Parity::Even) r[i] = 0;
    return r;
}

Subspace Subspace::homogeneous_closure() const {
    std::vector<Vector> parts;
    for (std::size_t k = 0; k < dim(); ++k) {
        parts.push_back(even_part(ambient_, vector(k)));
        parts.push_back(odd_part(ambient_, vector(k)));
    }
    return span(ambient_, parts);
}

bool Subspace::is_homogeneous() const { return homogeneous_closure().dim() == dim(); }

Subspace Subspace::sum(const Subspace& other) const {
    if (!(ambient_ == other.ambient_)) throw std::invalid_argument("subspaces of different spaces");
    auto v = vectors();
    for (auto& w : other.vectors()) v.push_back(w);
    return span(ambient_, v);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (!(ambient_ == other.ambient_)) throw std::invalid_argument("subspaces of different spaces");
    const std::size_t n = ambient_.dim(), k = dim(), l = other.dim();
    // Solve sum x_i u_i - sum y_j w_j = 0.
    Matrix m(n, k + l);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r = 0; r < n; ++r) m(r, i) = basis_(i, r);
    for (std::size_t j = 0; j < l; ++j)
        for (std::size_t r = 0; r < n; ++r) m(r, k + j) = -other.basis_(j, r);
    std::vector<Vector> common;
    for (const auto& x : nullspace(m)) {
        Vector v(n);
        for (std::size_t i = 0; i < k; ++i) axpy(v, x[i], basis_.row(i));
        common.push_back(std::move(v));
    }
    return span(ambient_, common);
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

}  // namespace sfx
