#include "sfx/doubleext/extension.hpp"

#include <algorithm>
#include <stdexcept>

#include "sfx/liesuper/structure.hpp"
#include "sfx/symplectic/reduction.hpp"
#include "sfx/superlinalg/format.hpp"
#include "sfx/superlinalg/graded_map.hpp"

namespace sfx {

namespace {

constexpr std::size_t kMaxWitnesses = 8;

SuperSpace dual_space(const SuperSpace& l) {
    std::vector<std::string> even, odd;
    for (const auto& b : l.basis()) (b.parity == Parity::Even ? even : odd).push_back(b.label + "*");
    return SuperSpace(even, odd);
}

std::string tuple_text(const SuperSpace& s, const Tuple& t) {
    std::string out = "(";
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) out += ",";
        out += s.label(t[k]);
    }
    return out + ")";
}

void add_witness(ConditionResult& r, std::string text) {
    r.passed = false;
    if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(std::move(text));
}

// Nonzero values of a cochain become witnesses.
void collect(ConditionResult& r, const Cochain& residual) {
    for (std::size_t f = 0; f < residual.tuple_count(); ++f) {
        Tuple t = residual.decode(f);
        if (!std::is_sorted(t.begin(), t.end())) continue;
        Vector v = residual.value(t);
        r.residual.insert(r.residual.end(), v.begin(), v.end());
        if (is_zero(v)) continue;
        add_witness(r, tuple_text(residual.source().space(), t) + ": " +
                           format_combination(residual.coefficients(), v));
    }
}

Matrix bracket_map_matrix(const LieSuperAlgebra& a, const HomSpace& end_a) {
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < a.dim(); ++i) cols.push_back(end_a.from_matrix(ad(a, unit_vector(a.dim(), i))));
    return Matrix::from_columns(cols, end_a.space.dim());
}

}  // namespace

const char* to_string(ModelKind k) { return k == ModelKind::Orthosymplectic ? "orthosymplectic" : "periplectic"; }

ExtensionInput ExtensionInput::zero(QuasiFrobenius base, SuperSpace l) {
    const std::size_t na = base.algebra.dim(), nl = l.dim();
    ExtensionInput in{std::move(base), std::move(l), {}, {}, {}};
    in.xi.assign(nl, Matrix(na, na));
    in.gamma.assign(nl, Matrix(nl, na));
    in.epsilon.assign(nl * nl * nl, Scalar(0));
    return in;
}

ExtensionData make_extension(ExtensionInput input) {
    const auto& aspace = input.base.algebra.space();
    const std::size_t na = aspace.dim(), nl = input.l.dim();
    if (!(input.base.form.space() == aspace)) throw PreconditionError("base form and algebra use different bases");
    if (input.xi.size() != nl || input.gamma.size() != nl || input.epsilon.size() != nl * nl * nl)
        throw PreconditionError("extension data does not match dim l = " + std::to_string(nl));
    for (std::size_t m = 0; m < nl; ++m) {
        if (input.xi[m].rows() != na || input.xi[m].cols() != na)
            throw PreconditionError("xi(" + input.l.label(m) + ") must be " + std::to_string(na) + "x" +
                                    std::to_string(na));
        if (input.gamma[m].rows() != nl || input.gamma[m].cols() != na)
            throw PreconditionError("gamma(" + input.l.label(m) + ") has the wrong shape");
    }
    if (!is_nondegenerate(input.base.form)) throw DegenerateFormError("base form is degenerate");

    ExtensionData d;
    d.twist = input.base.form.parity();
    d.kind = d.twist == Parity::Even ? ModelKind::Orthosymplectic : ModelKind::Periplectic;
    d.a = std::make_shared<const LieSuperAlgebra>(input.base.algebra);
    d.l = std::make_shared<const LieSuperAlgebra>(input.l);
    d.l_dual = dual_space(input.l);
    d.end_a = hom_space(aspace, aspace);
    d.hom_a_ldual = hom_space(aspace, d.l_dual);
    d.input = std::move(input);

    const auto& in = d.input;
    d.xi = Cochain::from_function(d.l, d.end_a.space, 1, Parity::Even,
                                  [&](const Tuple& t) { return d.end_a.from_matrix(in.xi[t[0]]); });
    d.gamma = Cochain::from_function(d.l, d.hom_a_ldual.space, 1, d.twist,
                                     [&](const Tuple& t) { return d.hom_a_ldual.from_matrix(in.gamma[t[0]]); });
    d.epsilon = Cochain::from_function(d.l, d.l_dual, 2, d.twist, [&](const Tuple& t) {
        Vector v(nl);
        for (std::size_t k = 0; k < nl; ++k) v[k] = in.epsilon[(t[0] * nl + t[1]) * nl + k];
        return v;
    });
    d.beta = derive_beta(d);
    d.alpha = derive_alpha(d);
    return d;
}

Cochain derive_beta(const ExtensionData& ext) {
    const auto& a = ext.a->space();
    const auto& l = ext.input.l;
    const auto& w = ext.input.base.form;
    const std::size_t na = a.dim(), nl = l.dim();
    return Cochain::from_function(ext.a, ext.l_dual, 2, ext.twist, [&](const Tuple& t) {
        const std::size_t i = t[0], j = t[1];
        Vector v(nl);
        for (std::size_t m = 0; m < nl; ++m) {
            const Parity L = l.parity(m);
            Vector xa = ext.input.xi[m].column(i), xb = ext.input.xi[m].column(j);
            v[m] = -koszul(L, a.parity(i) + a.parity(j)) * w.value(xa, unit_vector(na, j)) -
                   koszul(a.parity(j), L) * w.value(unit_vector(na, i), xb);
        }
        return v;
    });
}

Cochain derive_alpha(const ExtensionData& ext) {
    const auto& a = ext.a->space();
    const auto& l = ext.input.l;
    const std::size_t na = a.dim();
    const Matrix& gram = ext.input.base.form.gram();
    return Cochain::from_function(ext.l, a, 2, Parity::Even, [&](const Tuple& t) {
        const std::size_t p = t[0], q = t[1];
        Vector rhs(na);
        for (std::size_t i = 0; i < na; ++i)
            rhs[i] = koszul(l.parity(q), l.parity(p) + a.parity(i)) * ext.input.gamma[q](p, i) -
                     koszul(a.parity(i), l.parity(p)) * ext.input.gamma[p](q, i);
        return solve_unique(gram, rhs);
    });
}

std::vector<std::string> parity_issues(const ExtensionData& ext) {
    std::vector<std::string> out;
    const auto& a = ext.a->space();
    const auto& l = ext.input.l;
    const std::size_t na = a.dim(), nl = l.dim();
    auto dual_parity = [&](std::size_t k) { return l.parity(k) + ext.twist; };
    for (std::size_t m = 0; m < nl; ++m) {
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j)
                if (ext.input.xi[m](i, j) != 0 && a.parity(i) != a.parity(j) + l.parity(m))
                    out.push_back("xi(" + l.label(m) + ") sends " + a.label(j) + " to " + a.label(i));
        for (std::size_t k = 0; k < nl; ++k)
            for (std::size_t i = 0; i < na; ++i)
                if (ext.input.gamma[m](k, i) != 0 && dual_parity(k) != a.parity(i) + l.parity(m))
                    out.push_back("gamma(" + l.label(m) + ")(" + a.label(i) + ") has a component along " +
                                  ext.l_dual.label(k));
    }
    for (std::size_t p = 0; p < nl; ++p)
        for (std::size_t q = 0; q < nl; ++q)
            for (std::size_t k = 0; k < nl; ++k)
                if (ext.input.epsilon[(p * nl + q) * nl + k] != 0 && dual_parity(k) != l.parity(p) + l.parity(q))
                    out.push_back("eps(" + l.label(p) + "," + l.label(q) + ") has a component along " +
                                  ext.l_dual.label(k));
    for (std::size_t p = 0; p < nl; ++p)
        for (std::size_t q = p; q < nl; ++q)
            for (std::size_t k = 0; k < nl; ++k)
                if (ext.input.epsilon[(p * nl + q) * nl + k] !=
                    -koszul(l.parity(p), l.parity(q)) * ext.input.epsilon[(q * nl + p) * nl + k])
                    out.push_back("eps(" + l.label(p) + "," + l.label(q) + ") is not super-antisymmetric");
    return out;
}

bool ConditionReport::ok() const {
    return std::all_of(results.begin(), results.end(), [](const ConditionResult& r) { return r.passed; });
}

const ConditionResult& ConditionReport::get(const std::string& name) const {
    for (const auto& r : results)
        if (r.name == name) return r;
    throw std::out_of_range("no condition named " + name);
}

std::vector<std::string> ConditionReport::failed() const {
    std::vector<std::string> out;
    for (const auto& r : results)
        if (!r.passed) out.push_back(r.name);
    return out;
}

const std::vector<std::string>& condition_names() {
    static const std::vector<std::string> names{"qzz0", "qzz1", "qzz3", "gamma-compat", "qzz5", "qzz2", "qzz4"};
    return names;
}

ConditionReport check_conditions(const ExtensionData& ext) {
    const LieSuperAlgebra& a = *ext.a;
    const auto& as = a.space();
    const auto& l = ext.input.l;
    const std::size_t na = as.dim(), nl = l.dim();
    ConditionReport rep;

    {
        ConditionResult r{"qzz0", "xi(L) is a derivation of a", true, {}};
        for (std::size_t m = 0; m < nl; ++m) {
            auto d = is_derivation(a, GradedLinearMap(as, as, ext.input.xi[m]));
            for (auto [i, j] : d.witnesses)
                add_witness(r, "xi(" + l.label(m) + ") on (" + as.label(i) + "," + as.label(j) + ")");
            const GradedLinearMap whole(as, as, ext.input.xi[m]);
            for (const auto& part : {whole.even_part(), whole.odd_part()}) {
                const Parity p = part.matrix().is_zero() ? Parity::Even : *part.parity();
                for (std::size_t i = 0; i < na; ++i)
                    for (std::size_t j = 0; j < na; ++j) {
                        const Vector x = unit_vector(na, i), y = unit_vector(na, j);
                        Vector res = part.apply(a.bracket_basis(i, j)) - bracket(a, part.apply(x), y) -
                                     Scalar(koszul(p, as.parity(i))) * bracket(a, x, part.apply(y));
                        r.residual.insert(r.residual.end(), res.begin(), res.end());
                    }
            }
        }
        rep.results.push_back(std::move(r));
    }
    {
        ConditionResult r{"qzz1", "ad o alpha = d xi + 1/2 [xi ^ xi]", true, {}};
        Cochain lhs = postcompose(ext.alpha, bracket_map_matrix(a, ext.end_a), ext.end_a.space, Parity::Even);
        Cochain rhs = d_ce(ext.xi, Coefficients::Trivial) +
                      Scalar(1, 2) * wedge(supercommutator_pairing(as), ext.xi, ext.xi);
        collect(r, lhs - rhs);
        rep.results.push_back(std::move(r));
    }
    {
        ConditionResult r{"qzz3", "d_xi alpha = 0", true, {}};
        collect(r, d_xi(ext.alpha, ext.input.xi));
        rep.results.push_back(std::move(r));
    }
    {
        ConditionResult r{"gamma-compat", "gamma(L)[a,b] = beta(xi(L)a,b) + (-1)^{|a||L|} beta(a,xi(L)b)", true, {}};
        for (std::size_t m = 0; m < nl; ++m)
            for (std::size_t i = 0; i < na; ++i)
                for (std::size_t j = i; j < na; ++j) {
                    Vector lhs = ext.input.gamma[m].apply(a.bracket_basis(i, j));
                    Vector rhs = ext.beta.evaluate({ext.input.xi[m].column(i), unit_vector(na, j)}) +
                                 Scalar(koszul(as.parity(i), l.parity(m))) *
                                     ext.beta.evaluate({unit_vector(na, i), ext.input.xi[m].column(j)});
                    Vector res = lhs - rhs;
                    r.residual.insert(r.residual.end(), res.begin(), res.end());
                    if (!is_zero(res))
                        add_witness(r, "(" + l.label(m) + "," + as.label(i) + "," + as.label(j) +
                                           "): " + format_combination(ext.l_dual, res));
                }
        rep.results.push_back(std::move(r));
    }
    {
        ConditionResult r{"qzz5", "Ev(gamma ^ alpha) = 0", true, {}};
        collect(r, wedge(ev_pairing(as, ext.l_dual), ext.gamma, ext.alpha));
        rep.results.push_back(std::move(r));
    }
    {
        ConditionResult r{"qzz2", "d_xi gamma = beta~ o alpha", true, {}};
        // xi^(L) f = (-1)^{|f||L|} f o xi(L) on Hom(a, l*).
        const HomSpace& h = ext.hom_a_ldual;
        std::vector<Matrix> action;
        for (std::size_t m = 0; m < nl; ++m) {
            Matrix act(h.space.dim(), h.space.dim());
            for (std::size_t k = 0; k < nl; ++k)
                for (std::size_t i = 0; i < na; ++i) {
                    const std::size_t f = h.index(k, i);
                    const int s = koszul(h.space.parity(f), l.parity(m));
                    for (std::size_t j = 0; j < na; ++j)
                        if (ext.input.xi[m](i, j) != 0) act(h.index(k, j), f) += s * ext.input.xi[m](i, j);
                }
            action.push_back(std::move(act));
        }
        std::vector<Vector> cols;
        for (std::size_t x = 0; x < na; ++x) {
            Matrix bx(nl, na);
            for (std::size_t y = 0; y < na; ++y) {
                Vector v = ext.beta.value({x, y});
                for (std::size_t k = 0; k < nl; ++k) bx(k, y) = v[k];
            }
            cols.push_back(h.from_matrix(bx));
        }
        Cochain rhs = postcompose(ext.alpha, Matrix::from_columns(cols, h.space.dim()), h.space, ext.twist);
        collect(r, d_xi(ext.gamma, action) - rhs);
        rep.results.push_back(std::move(r));
    }
    {
        ConditionResult r{"qzz4", "cyclic sum of eps(L1,L2)(L3) vanishes", true, {}};
        auto e = [&](std::size_t p, std::size_t q, std::size_t k) { return ext.input.epsilon[(p * nl + q) * nl + k]; };
        for (std::size_t x = 0; x < nl; ++x)
            for (std::size_t y = x; y < nl; ++y)
                for (std::size_t z = y; z < nl; ++z) {
                    const Parity p1 = l.parity(x), p2 = l.parity(y), p3 = l.parity(z);
                    Scalar s = koszul(p1, p3) * e(x, y, z) + koszul(p2, p3) * e(z, x, y) + koszul(p1, p2) * e(y, z, x);
                    r.residual.push_back(s);
                    if (s != 0)
                        add_witness(r, "(" + l.label(x) + "," + l.label(y) + "," + l.label(z) + "): " + to_string(s));
                }
        rep.results.push_back(std::move(r));
    }
    return rep;
}

}  // namespace sfx
