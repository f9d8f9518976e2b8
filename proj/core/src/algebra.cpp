#include "sfx/liesuper/algebra.hpp"

#include <stdexcept>

#include "sfx/errors.hpp"

namespace sfx {

LieSuperAlgebra::LieSuperAlgebra(SuperSpace space) : space_(std::move(space)) {
    c_.resize(dim() * dim() * dim());
}

LieSuperAlgebra::LieSuperAlgebra(SuperSpace space, std::vector<Scalar> constants)
    : space_(std::move(space)), c_(std::move(constants)) {
    if (c_.size() != dim() * dim() * dim()) throw std::invalid_argument("structure tensor has the wrong size");
}

LieSuperAlgebra LieSuperAlgebra::from_brackets(
    SuperSpace space, const std::vector<std::tuple<std::size_t, std::size_t, Vector>>& brackets) {
    const std::size_t n = space.dim();
    std::vector<Scalar> c(n * n * n);
    std::vector<bool> set(n * n, false);
    auto assign = [&](std::size_t i, std::size_t j, const Vector& v) {
        if (set[i * n + j]) {
            for (std::size_t k = 0; k < n; ++k)
                if (c[(i * n + j) * n + k] != v[k])
                    throw PreconditionError("inconsistent bracket [" + space.label(i) + "," + space.label(j) + "]");
            return;
        }
        set[i * n + j] = true;
        for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = v[k];
    };
    for (const auto& [i, j, v] : brackets) {
        if (i >= n || j >= n || v.size() != n) throw std::invalid_argument("bracket entry out of range");
        Scalar s = -koszul(space.parity(i), space.parity(j));
        if (i == j) {
            if (space.parity(i) == Parity::Even && !is_zero(v))
                throw PreconditionError("bracket [" + space.label(i) + "," + space.label(i) +
                                        "] of an even vector with itself must vanish");
            assign(i, i, v);
            continue;
        }
        assign(i, j, v);
        assign(j, i, s * v);
    }
    return LieSuperAlgebra(std::move(space), std::move(c));
}

Vector LieSuperAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    const std::size_t n = dim();
    if (i >= n || j >= n) throw std::out_of_range("basis index");
    auto first = c_.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n);
    return Vector(first, first + static_cast<std::ptrdiff_t>(n));
}

bool LieSuperAlgebra::is_abelian() const {
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

bool operator==(const LieSuperAlgebra& a, const LieSuperAlgebra& b) {
    return a.space_ == b.space_ && a.c_ == b.c_;
}

Vector bracket(const LieSuperAlgebra& alg, const Vector& x, const Vector& y) {
    const std::size_t n = alg.dim();
    if (x.size() != n || y.size() != n) throw std::invalid_argument("bracket: dimension mismatch");
    Vector r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0) continue;
            Scalar f = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(alg.c(i, j, k)) != 0) r[k] += f * alg.c(i, j, k);
        }
    }
    return r;
}

Matrix ad(const LieSuperAlgebra& alg, const Vector& x) {
    const std::size_t n = alg.dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector col = bracket(alg, x, unit_vector(n, j));
        for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
    }
    return m;
}

LieSuperAlgebra change_basis(const LieSuperAlgebra& alg, const SuperSpace& new_space, const Matrix& basis) {
    const std::size_t n = alg.dim();
    if (basis.rows() != n || basis.cols() != n || new_space.dim() != n)
        throw std::invalid_argument("change_basis: shape mismatch");
    Matrix inv = inverse(basis);
    std::vector<Scalar> c(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vector v = inv.apply(bracket(alg, basis.column(a), basis.column(b)));
            for (std::size_t k = 0; k < n; ++k) c[(a * n + b) * n + k] = v[k];
        }
    return LieSuperAlgebra(new_space, std::move(c));
}

std::size_t ValidationReport::count(AxiomViolation::Kind k) const {
    std::size_t n = 0;
    for (const auto& v : violations)
        if (v.kind == k) ++n;
    return n;
}

const char* to_string(AxiomViolation::Kind k) {
    switch (k) {
        case AxiomViolation::Kind::Grading: return "grading";
        case AxiomViolation::Kind::Antisymmetry: return "antisymmetry";
        case AxiomViolation::Kind::Jacobi: return "jacobi";
    }
    return "?";
}

Vector jacobi_residual(const LieSuperAlgebra& alg, std::size_t i, std::size_t j, std::size_t k) {
    const std::size_t n = alg.dim();
    const auto& sp = alg.space();
    auto nested = [&](std::size_t a, std::size_t b, std::size_t c) {
        Vector r(n);
        for (std::size_t m = 0; m < n; ++m) {
            const Scalar& f = alg.c(a, b, m);
            if (sgn(f) == 0) continue;
            for (std::size_t t = 0; t < n; ++t)
                if (sgn(alg.c(m, c, t)) != 0) r[t] += f * alg.c(m, c, t);
        }
        return r;
    };
    Parity x = sp.parity(i), y = sp.parity(j), z = sp.parity(k);
    Vector r = Scalar(koszul(x, z)) * nested(i, j, k);
    axpy(r, Scalar(koszul(x, y)), nested(j, k, i));
    axpy(r, Scalar(koszul(y, z)), nested(k, i, j));
    return r;
}

ValidationReport validate(const LieSuperAlgebra& alg) {
    ValidationReport rep;
    const std::size_t n = alg.dim();
    const auto& sp = alg.space();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector bad(n);
            bool any = false;
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(alg.c(i, j, k)) != 0 && sp.parity(k) != sp.parity(i) + sp.parity(j)) {
                    bad[k] = alg.c(i, j, k);
                    any = true;
                }
            if (any) rep.violations.push_back({AxiomViolation::Kind::Grading, {i, j}, bad});
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vector r = alg.bracket_basis(j, i);
            axpy(r, Scalar(koszul(sp.parity(i), sp.parity(j))), alg.bracket_basis(i, j));
            if (!is_zero(r)) rep.violations.push_back({AxiomViolation::Kind::Antisymmetry, {i, j}, r});
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) {
                Vector r = jacobi_residual(alg, i, j, k);
                if (!is_zero(r)) rep.violations.push_back({AxiomViolation::Kind::Jacobi, {i, j, k}, r});
            }
    return rep;
}

}  // namespace sfx
