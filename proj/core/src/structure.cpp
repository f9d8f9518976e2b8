#include "sfx/liesuper/structure.hpp"

#include "sfx/errors.hpp"

namespace sfx {

DerivationReport is_derivation(const LieSuperAlgebra& alg, const GradedLinearMap& d) {
    if (!(d.source() == alg.space()) || !(d.target() == alg.space()))
        throw std::invalid_argument("derivation candidate must be an endomorphism of the algebra");
    DerivationReport rep;
    const std::size_t n = alg.dim();
    const auto& sp = alg.space();
    const GradedLinearMap parts[2] = {d.even_part(), d.odd_part()};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool fails = false;
            for (int p = 0; p < 2 && !fails; ++p) {
                const Matrix& m = parts[p].matrix();
                Vector lhs = m.apply(alg.bracket_basis(i, j));
                Vector rhs = bracket(alg, m.column(i), unit_vector(n, j));
                axpy(rhs, Scalar(minus_one_pow(p * bit(sp.parity(i)))), bracket(alg, unit_vector(n, i), m.column(j)));
                fails = lhs != rhs;
            }
            if (fails) rep.witnesses.emplace_back(i, j);
        }
    return rep;
}

Subspace center(const LieSuperAlgebra& alg) {
    const std::size_t n = alg.dim();
    // x is central iff sum_i x_i c[i][j][k] = 0 for all j,k.
    Matrix m(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = alg.c(i, j, k);
    return Subspace::span(alg.space(), nullspace(m));
}

bool is_ideal(const LieSuperAlgebra& alg, const Subspace& s) {
    const std::size_t n = alg.dim();
    for (std::size_t k = 0; k < s.dim(); ++k)
        for (std::size_t j = 0; j < n; ++j)
            if (!s.contains(bracket(alg, s.vector(k), unit_vector(n, j)))) return false;
    return true;
}

bool is_homogeneous_ideal(const LieSuperAlgebra& alg, const Subspace& s) {
    return s.is_homogeneous() && is_ideal(alg, s);
}

bool is_subalgebra(const LieSuperAlgebra& alg, const Subspace& s) {
    for (std::size_t a = 0; a < s.dim(); ++a)
        for (std::size_t b = 0; b < s.dim(); ++b)
            if (!s.contains(bracket(alg, s.vector(a), s.vector(b)))) return false;
    return true;
}

bool is_abelian(const LieSuperAlgebra& alg, const Subspace& s) {
    for (std::size_t a = 0; a < s.dim(); ++a)
        for (std::size_t b = 0; b < s.dim(); ++b)
            if (!is_zero(bracket(alg, s.vector(a), s.vector(b)))) return false;
    return true;
}

Vector Quotient::project(const Vector& x) const {
    return rep_span.coordinates(ideal.reduce(x));
}

Matrix Quotient::projection_matrix() const {
    const std::size_t n = ideal.ambient().dim();
    Matrix p(rep_span.dim(), n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector r = ideal.reduce(unit_vector(n, i));
        // Outside sub the class is undefined; keep the coordinates along rep pivots.
        for (std::size_t k = 0; k < rep_span.dim(); ++k) p(k, i) = r[rep_span.pivots()[k]];
    }
    return p;
}

Quotient subquotient(const LieSuperAlgebra& alg, const Subspace& sub, const Subspace& j) {
    if (!sub.contains(j)) throw PreconditionError("quotient: ideal is not contained in the subalgebra");
    if (!sub.is_homogeneous() || !j.is_homogeneous()) throw PreconditionError("quotient: subspace is not homogeneous");
    if (!is_subalgebra(alg, sub)) throw PreconditionError("quotient: not a subalgebra");
    for (std::size_t a = 0; a < j.dim(); ++a)
        for (std::size_t b = 0; b < sub.dim(); ++b)
            if (!j.contains(bracket(alg, j.vector(a), sub.vector(b))))
                throw PreconditionError("quotient: subspace is not an ideal");

    std::vector<Vector> reduced;
    for (std::size_t k = 0; k < sub.dim(); ++k) reduced.push_back(j.reduce(sub.vector(k)));
    Quotient q;
    q.ideal = j;
    q.sub = sub;
    q.rep_span = Subspace::span(alg.space(), reduced);
    const std::size_t m = q.rep_span.dim();
    q.representatives = q.rep_span.basis().transpose();

    std::vector<std::string> even, odd;
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t p = q.rep_span.pivots()[k];
        (alg.space().parity(p) == Parity::Even ? even : odd).push_back(alg.space().label(p));
    }
    SuperSpace qs(std::move(even), std::move(odd));
    std::vector<Scalar> c(m * m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vector v = q.project(bracket(alg, q.rep_span.vector(a), q.rep_span.vector(b)));
            for (std::size_t k = 0; k < m; ++k) c[(a * m + b) * m + k] = v[k];
        }
    q.algebra = LieSuperAlgebra(std::move(qs), std::move(c));
    return q;
}

Quotient quotient(const LieSuperAlgebra& alg, const Subspace& j) {
    return subquotient(alg, Subspace::whole(alg.space()), j);
}

std::vector<Subspace> lower_central_series(const LieSuperAlgebra& alg) {
    std::vector<Subspace> series{Subspace::whole(alg.space())};
    const std::size_t n = alg.dim();
    while (true) {
        const Subspace& last = series.back();
        std::vector<Vector> gens;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < last.dim(); ++k) gens.push_back(bracket(alg, unit_vector(n, i), last.vector(k)));
        Subspace next = Subspace::span(alg.space(), gens);
        if (next.dim() == last.dim()) break;
        series.push_back(std::move(next));
    }
    return series;
}

std::optional<int> nilpotency_class(const LieSuperAlgebra& alg) {
    if (alg.dim() == 0) return 0;
    auto series = lower_central_series(alg);
    if (series.back().dim() != 0) return std::nullopt;
    return static_cast<int>(series.size()) - 1;
}

}  // namespace sfx
