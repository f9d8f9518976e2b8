#include "sfx/symplectic/form.hpp"

#include <stdexcept>

namespace sfx {

SuperForm::SuperForm(SuperSpace space, Matrix gram, Parity parity)
    : space_(std::move(space)), gram_(std::move(gram)), parity_(parity) {
    if (gram_.rows() != space_.dim() || gram_.cols() != space_.dim())
        throw std::invalid_argument("Gram matrix does not match the space");
}

SuperForm SuperForm::zero(const SuperSpace& space, Parity parity) {
    return SuperForm(space, Matrix(space.dim(), space.dim()), parity);
}

Scalar SuperForm::value(const Vector& x, const Vector& y) const {
    if (x.size() != space_.dim() || y.size() != space_.dim()) throw std::invalid_argument("form: dimension mismatch");
    Scalar r = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (sgn(y[j]) != 0 && sgn(gram_(i, j)) != 0) r += x[i] * gram_(i, j) * y[j];
    }
    return r;
}

bool operator==(const SuperForm& a, const SuperForm& b) {
    return a.space_ == b.space_ && a.gram_ == b.gram_ && a.parity_ == b.parity_;
}

const char* to_string(FormIssue::Kind k) {
    return k == FormIssue::Kind::Homogeneity ? "homogeneity" : "antisymmetry";
}

std::vector<FormIssue> form_issues(const SuperForm& form) {
    std::vector<FormIssue> out;
    const auto& sp = form.space();
    for (std::size_t i = 0; i < sp.dim(); ++i)
        for (std::size_t j = 0; j < sp.dim(); ++j)
            if (sgn(form(i, j)) != 0 && sp.parity(i) + sp.parity(j) != form.parity())
                out.push_back({FormIssue::Kind::Homogeneity, i, j});
    for (std::size_t i = 0; i < sp.dim(); ++i)
        for (std::size_t j = i; j < sp.dim(); ++j)
            if (form(i, j) != -koszul(sp.parity(i), sp.parity(j)) * form(j, i))
                out.push_back({FormIssue::Kind::Antisymmetry, i, j});
    return out;
}

bool is_nondegenerate(const SuperForm& form) { return rank(form.gram()) == form.space().dim(); }

Scalar closedness_residual(const LieSuperAlgebra& alg, const SuperForm& form, std::size_t a, std::size_t b,
                           std::size_t c) {
    const auto& sp = alg.space();
    const std::size_t n = alg.dim();
    auto pair = [&](std::size_t x, std::size_t y, std::size_t z) {
        Scalar r = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (sgn(alg.c(y, z, k)) != 0) r += form(x, k) * alg.c(y, z, k);
        return r;
    };
    Parity pa = sp.parity(a), pb = sp.parity(b), pc = sp.parity(c);
    return koszul(pa, pc) * pair(a, b, c) + koszul(pc, pb) * pair(c, a, b) + koszul(pb, pa) * pair(b, c, a);
}

std::vector<ClosednessWitness> closedness_failures(const LieSuperAlgebra& alg, const SuperForm& form) {
    if (!(alg.space() == form.space())) throw std::invalid_argument("form and algebra live on different spaces");
    std::vector<ClosednessWitness> out;
    const std::size_t n = alg.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                Scalar r = closedness_residual(alg, form, a, b, c);
                if (sgn(r) != 0) out.push_back({a, b, c, r});
            }
    return out;
}

QuasiFrobeniusReport validate(const QuasiFrobenius& qf) {
    QuasiFrobeniusReport rep;
    rep.algebra = validate(qf.algebra);
    rep.form = form_issues(qf.form);
    rep.nondegenerate = is_nondegenerate(qf.form);
    rep.closedness = closedness_failures(qf.algebra, qf.form);
    return rep;
}

}  // namespace sfx
