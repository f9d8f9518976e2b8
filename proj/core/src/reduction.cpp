#include "sfx/symplectic/reduction.hpp"

namespace sfx {

Subspace orthogonal(const SuperForm& form, const Subspace& s) {
    if (!is_nondegenerate(form)) throw DegenerateFormError("orthogonal: the form is degenerate");
    if (!(s.ambient() == form.space())) throw std::invalid_argument("orthogonal: subspace of another space");
    const std::size_t n = form.space().dim();
    // Rows: x -> omega(x, v_k) for each basis vector v_k of s.
    Matrix m(s.dim(), n);
    for (std::size_t k = 0; k < s.dim(); ++k) {
        Vector v = s.vector(k);
        for (std::size_t i = 0; i < n; ++i) {
            Scalar r = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (sgn(v[j]) != 0) r += form(i, j) * v[j];
            m(k, i) = r;
        }
    }
    return Subspace::span(form.space(), nullspace(m));
}

std::vector<std::string> IdealClassification::labels() const {
    std::vector<std::string> out;
    if (isotropic) out.emplace_back("isotropic");
    if (lagrangian) out.emplace_back("lagrangian");
    if (degenerate) out.emplace_back("degenerate");
    if (nondegenerate) out.emplace_back("nondegenerate");
    return out;
}

IdealClassification classify_ideal(const QuasiFrobenius& qf, const Subspace& j) {
    if (!j.is_homogeneous()) throw PreconditionError("classify_ideal: subspace is not homogeneous");
    if (!is_ideal(qf.algebra, j)) throw PreconditionError("classify_ideal: subspace is not an ideal");
    Subspace perp = orthogonal(qf.form, j);
    IdealClassification c;
    c.isotropic = perp.contains(j);
    c.lagrangian = c.isotropic && perp.dim() == j.dim();
    c.degenerate = j.intersect(perp).dim() != 0;
    c.nondegenerate = !c.degenerate;
    return c;
}

bool isotropic_ideal_is_abelian_check(const QuasiFrobenius& qf, const Subspace& j) {
    return is_abelian(qf.algebra, j);
}

Reduction reduce(const QuasiFrobenius& qf, const Subspace& j) {
    IdealClassification c = classify_ideal(qf, j);
    if (!c.isotropic) throw PreconditionError("reduce: ideal is not isotropic");
    Reduction r;
    r.ideal = j;
    r.perp = orthogonal(qf.form, j);
    r.quotient = subquotient(qf.algebra, r.perp, j);
    const std::size_t m = r.quotient.rep_span.dim();
    Matrix g(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            g(a, b) = qf.form.value(r.quotient.rep_span.vector(a), r.quotient.rep_span.vector(b));
    r.reduced.algebra = r.quotient.algebra;
    r.reduced.form = SuperForm(r.quotient.algebra.space(), std::move(g), qf.form.parity());
    return r;
}

Subspace balanced_ideal(const QuasiFrobenius& qf) {
    Subspace z = center(qf.algebra);
    Subspace j = z.intersect(orthogonal(qf.form, z));
    if (j.dim() == 0) throw TrivialIntersectionError("the center is nondegenerate: z meet z-perp is zero");
    return j;
}

}  // namespace sfx
