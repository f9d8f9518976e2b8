#include "sfx/doubleext/model.hpp"

#include <map>
#include <stdexcept>

#include "sfx/liesuper/structure.hpp"
#include "sfx/symplectic/reduction.hpp"
#include "sfx/superlinalg/format.hpp"

namespace sfx {

namespace {

std::vector<std::size_t> positions(const CanonicalSpace& c, std::size_t first, std::size_t count) {
    std::vector<std::size_t> inv(c.order.size());
    for (std::size_t n = 0; n < c.order.size(); ++n) inv[c.order[n]] = n;
    return {inv.begin() + static_cast<std::ptrdiff_t>(first),
            inv.begin() + static_cast<std::ptrdiff_t>(first + count)};
}

Vector column_of(const Matrix& m, std::size_t j) { return m.column(j); }

std::string vector_text(const SuperSpace& s, const Vector& v) { return format_combination(s, v); }

}  // namespace

Subspace StandardModel::dual_block() const { return Subspace::coordinate(qf.algebra.space(), z_pos); }
Subspace StandardModel::a_block() const { return Subspace::coordinate(qf.algebra.space(), a_pos); }
Subspace StandardModel::l_block() const { return Subspace::coordinate(qf.algebra.space(), l_pos); }

StandardModel force_build(const ExtensionData& ext) {
    const auto& as = ext.a->space();
    const auto& l = ext.input.l;
    const std::size_t na = as.dim(), nl = l.dim();
    const bool peri = ext.kind == ModelKind::Periplectic;

    std::vector<BasisVector> declared;
    for (std::size_t k = 0; k < nl; ++k) {
        const std::string dual = l.label(k) + "*";
        declared.push_back({peri ? "pi(" + dual + ")" : dual, l.parity(k) + ext.twist});
    }
    for (const auto& b : as.basis()) declared.push_back(b);
    for (const auto& b : l.basis()) declared.push_back(b);
    CanonicalSpace canon = canonicalize(declared);

    StandardModel m;
    m.data = ext;
    m.z_pos = positions(canon, 0, nl);
    m.a_pos = positions(canon, nl, na);
    m.l_pos = positions(canon, nl + na, nl);
    const SuperSpace& ds = canon.space;
    const std::size_t n = ds.dim();

    std::vector<Scalar> c(n * n * n);
    auto put = [&](std::size_t x, std::size_t y, const Vector& a_part, const Vector& z_part) {
        Scalar* out = &c[(x * n + y) * n];
        for (std::size_t i = 0; i < na; ++i) out[m.a_pos[i]] += a_part[i];
        for (std::size_t k = 0; k < nl; ++k) out[m.z_pos[k]] += z_part[k];
    };
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            put(m.a_pos[i], m.a_pos[j], ext.a->bracket_basis(i, j), ext.beta.value({i, j}));
    for (std::size_t p = 0; p < nl; ++p)
        for (std::size_t i = 0; i < na; ++i) {
            Vector xa = ext.input.xi[p].column(i), ga = ext.input.gamma[p].column(i);
            put(m.l_pos[p], m.a_pos[i], xa, ga);
            const Scalar s = -koszul(as.parity(i), l.parity(p));
            put(m.a_pos[i], m.l_pos[p], s * xa, s * ga);
        }
    for (std::size_t p = 0; p < nl; ++p)
        for (std::size_t q = 0; q < nl; ++q) put(m.l_pos[p], m.l_pos[q], ext.alpha.value({p, q}), ext.epsilon.value({p, q}));

    Matrix gram(n, n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) gram(m.a_pos[i], m.a_pos[j]) = ext.input.base.form(i, j);
    for (std::size_t k = 0; k < nl; ++k) {
        const Parity zp = ds.parity(m.z_pos[k]);
        gram(m.z_pos[k], m.l_pos[k]) = 1;
        gram(m.l_pos[k], m.z_pos[k]) = -koszul(zp, l.parity(k));
    }
    m.qf = QuasiFrobenius{LieSuperAlgebra(ds, std::move(c)), SuperForm(ds, std::move(gram), ext.twist)};
    return m;
}

namespace {

StandardModel checked_build(const ExtensionData& ext) {
    auto base = validate(ext.input.base);
    if (!base.ok()) throw PreconditionError("base is not a quasi-Frobenius Lie superalgebra");
    auto issues = parity_issues(ext);
    if (!issues.empty()) throw ParityMismatchError("bracket would not be even: " + issues.front());
    ConditionReport rep = check_conditions(ext);
    if (!rep.ok()) {
        std::string names;
        for (const auto& n : rep.failed()) names += (names.empty() ? "" : ", ") + n;
        throw ConditionFailureError("extension conditions fail: " + names, std::move(rep));
    }
    return force_build(ext);
}

}  // namespace

StandardModel build_orthosymplectic(const ExtensionData& ext) {
    if (ext.kind != ModelKind::Orthosymplectic)
        throw ParityMismatchError("base form is odd; the orthosymplectic model needs an even form");
    return checked_build(ext);
}

StandardModel build_periplectic(const ExtensionData& ext) {
    if (ext.kind != ModelKind::Periplectic)
        throw ParityMismatchError("base form is even; the periplectic model needs an odd form");
    return checked_build(ext);
}

StandardModel build(const ExtensionData& ext) {
    return ext.kind == ModelKind::Orthosymplectic ? build_orthosymplectic(ext) : build_periplectic(ext);
}

std::vector<std::string> quadruple_issues(const ExtensionQuadruple& q) {
    std::vector<std::string> out;
    const auto& gs = q.g.algebra.space();
    const std::size_t n = gs.dim(), na = q.a.algebra.dim(), nl = q.l.dim();
    if (!validate(q.g).ok()) out.push_back("g is not quasi-Frobenius");
    if (!validate(q.a).ok()) out.push_back("a is not quasi-Frobenius");
    if (!out.empty()) return out;
    if (!is_homogeneous_ideal(q.g.algebra, q.j)) {
        out.push_back("j is not a homogeneous ideal");
        return out;
    }
    Subspace perp = orthogonal(q.g.form, q.j);
    if (!perp.contains(q.j)) out.push_back("j is not isotropic");
    if (q.i.rows() != n || q.i.cols() != na) {
        out.push_back("i has the wrong shape");
        return out;
    }
    if (q.p.rows() != nl || q.p.cols() != n) {
        out.push_back("p has the wrong shape");
        return out;
    }
    if (q.j.dim() != nl) out.push_back("dim j differs from dim l");
    for (std::size_t x = 0; x < na; ++x) {
        Vector ix = q.i.column(x);
        if (!perp.contains(ix)) out.push_back("i(" + q.a.algebra.space().label(x) + ") is not in j-perp");
        Vector wrong = q.a.algebra.space().parity(x) == Parity::Even ? odd_part(gs, ix) : even_part(gs, ix);
        if (!is_zero(wrong)) out.push_back("i(" + q.a.algebra.space().label(x) + ") is not homogeneous");
        for (std::size_t y = 0; y < na; ++y) {
            if (q.g.form.value(ix, q.i.column(y)) != q.a.form(x, y))
                out.push_back("i does not preserve the form on (" + q.a.algebra.space().label(x) + "," +
                              q.a.algebra.space().label(y) + ")");
            Vector diff = bracket(q.g.algebra, ix, q.i.column(y)) - q.i.apply(q.a.algebra.bracket_basis(x, y));
            if (!q.j.contains(diff))
                out.push_back("i is not a homomorphism modulo j on (" + q.a.algebra.space().label(x) + "," +
                              q.a.algebra.space().label(y) + ")");
        }
    }
    std::vector<Vector> span = q.j.vectors();
    for (std::size_t x = 0; x < na; ++x) span.push_back(q.i.column(x));
    if (Subspace::span(gs, span).dim() != perp.dim() || perp.dim() != q.j.dim() + na)
        out.push_back("i does not induce an isomorphism a -> j-perp/j");
    if (rank(q.p) != nl) out.push_back("p is not surjective");
    for (std::size_t m = 0; m < nl; ++m)
        for (std::size_t x = 0; x < n; ++x)
            if (q.p(m, x) != 0 && q.l.parity(m) != gs.parity(x)) out.push_back("p is not even");
    for (const auto& v : perp.vectors())
        if (!is_zero(q.p.apply(v))) {
            out.push_back("p does not vanish on j-perp");
            break;
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x; y < n; ++y)
            if (!is_zero(q.p.apply(q.g.algebra.bracket_basis(x, y)))) {
                out.push_back("p is not a homomorphism onto the abelian l");
                x = n;
                break;
            }
    return out;
}

ExtensionQuadruple quadruple_of(const StandardModel& m) {
    const std::size_t n = m.qf.algebra.dim(), na = m.a_pos.size(), nl = m.l_pos.size();
    Matrix i(n, na), p(nl, n);
    for (std::size_t x = 0; x < na; ++x) i(m.a_pos[x], x) = 1;
    for (std::size_t k = 0; k < nl; ++k) p(k, m.l_pos[k]) = 1;
    return {m.qf, m.dual_block(), m.data.input.base, std::move(i), m.data.input.l, std::move(p)};
}

ExtensionQuadruple quadruple_from_ideal(const QuasiFrobenius& g, const Subspace& j) {
    const auto& gs = g.algebra.space();
    const std::size_t n = gs.dim();
    if (!center(g.algebra).contains(j)) throw PreconditionError("the ideal is not central");
    Reduction r = reduce(g, j);
    const std::vector<std::size_t> out = r.perp.complement_indices();
    std::vector<std::string> even, odd;
    for (std::size_t c : out) (gs.parity(c) == Parity::Even ? even : odd).push_back(gs.label(c));
    SuperSpace l(std::move(even), std::move(odd));
    // complement_indices is increasing, and so even-first like l.
    Matrix p(out.size(), n);
    for (std::size_t x = 0; x < n; ++x) {
        Vector v = r.perp.reduce(unit_vector(n, x));
        for (std::size_t m = 0; m < out.size(); ++m) p(m, x) = v[out[m]];
    }
    return {g, j, r.reduced, r.quotient.representatives, std::move(l), std::move(p)};
}

EquivalenceReport verify_extension_equivalence(const ExtensionQuadruple& q1, const ExtensionQuadruple& q2,
                                               const Matrix& phi) {
    EquivalenceReport r;
    const auto& s1 = q1.g.algebra.space();
    const auto& s2 = q2.g.algebra.space();
    const std::size_t n1 = s1.dim(), n2 = s2.dim();
    if (phi.rows() != n2 || phi.cols() != n1) throw PreconditionError("phi has the wrong shape");
    for (std::size_t y = 0; y < n2; ++y)
        for (std::size_t x = 0; x < n1; ++x)
            if (phi(y, x) != 0 && s2.parity(y) != s1.parity(x)) {
                r.even = false;
                r.witnesses.push_back("phi(" + s1.label(x) + ") has a component along " + s2.label(y));
            }
    if (n1 != n2 || rank(phi) != n1) {
        r.invertible = false;
        r.witnesses.push_back("phi is not invertible");
    }
    for (std::size_t x = 0; x < n1; ++x)
        for (std::size_t y = x; y < n1; ++y) {
            Vector px = phi.column(x), py = phi.column(y);
            Vector lhs = phi.apply(q1.g.algebra.bracket_basis(x, y));
            Vector rhs = bracket(q2.g.algebra, px, py);
            if (lhs != rhs) {
                r.bracket = false;
                r.witnesses.push_back("phi[" + s1.label(x) + "," + s1.label(y) + "] = " + vector_text(s2, lhs) +
                                      " but [phi,phi] = " + vector_text(s2, rhs));
            }
            if (q2.g.form.value(px, py) != q1.g.form(x, y) || q2.g.form.value(py, px) != q1.g.form(y, x)) {
                r.form = false;
                r.witnesses.push_back("form differs on (" + s1.label(x) + "," + s1.label(y) + ")");
            }
        }
    std::vector<Vector> image;
    for (const auto& v : q1.j.vectors()) image.push_back(phi.apply(v));
    if (!(Subspace::span(s2, image) == q2.j)) {
        r.ideal = false;
        r.witnesses.push_back("phi(j1) != j2");
    }
    const auto& as = q1.a.algebra.space();
    for (std::size_t x = 0; x < as.dim() && x < q2.i.cols(); ++x)
        if (!q2.j.contains(phi.apply(column_of(q1.i, x)) - column_of(q2.i, x))) {
            r.inclusion = false;
            r.witnesses.push_back("phi i1(" + as.label(x) + ") - i2(" + as.label(x) + ") is not in j2");
        }
    if (!(q2.p * phi == q1.p)) {
        r.projection = false;
        r.witnesses.push_back("p2 phi != p1");
    }
    return r;
}

EquivalenceReport verify_equivalence(const StandardModel& m1, const StandardModel& m2, const Matrix& phi) {
    return verify_extension_equivalence(quadruple_of(m1), quadruple_of(m2), phi);
}

Extraction extract_standard(const ExtensionQuadruple& q) {
    auto issues = quadruple_issues(q);
    if (!issues.empty()) throw PreconditionError("invalid extension quadruple: " + issues.front());
    const auto& gs = q.g.algebra.space();
    const auto& w = q.g.form;
    const std::size_t n = gs.dim(), na = q.a.algebra.dim(), nl = q.l.dim();

    Subspace perp = orthogonal(w, q.j);
    std::vector<Vector> seeds;
    for (std::size_t c : perp.complement_indices()) seeds.push_back(unit_vector(n, c));
    Matrix W = Matrix::from_columns(seeds, n);
    Matrix s = W * inverse(q.p * W);

    // z_m in j with w(z_m, s_l) = delta.
    const auto jv = q.j.vectors();
    Matrix pair(nl, jv.size());
    for (std::size_t l = 0; l < nl; ++l)
        for (std::size_t r = 0; r < jv.size(); ++r) pair(l, r) = w.value(jv[r], s.column(l));
    std::vector<Vector> z;
    for (std::size_t m = 0; m < nl; ++m) {
        Vector y = solve_unique(pair, unit_vector(nl, m));
        Vector v(n);
        for (std::size_t r = 0; r < jv.size(); ++r) axpy(v, y[r], jv[r]);
        z.push_back(std::move(v));
    }
    std::vector<Vector> sec;
    for (std::size_t k = 0; k < nl; ++k) {
        Vector v = s.column(k);
        for (std::size_t l = 0; l < nl; ++l) axpy(v, Scalar(-1, 2) * w.value(s.column(k), s.column(l)), z[l]);
        sec.push_back(std::move(v));
    }
    for (std::size_t k = 0; k < nl; ++k)
        for (std::size_t l = 0; l < nl; ++l)
            if (w.value(sec[k], sec[l]) != 0) throw std::logic_error("section is not isotropic");

    std::vector<Vector> js = jv;
    js.insert(js.end(), sec.begin(), sec.end());
    Subspace va = orthogonal(w, Subspace::span(gs, js));
    // j-perp = va + j; split i(a) along it.
    std::vector<Vector> split_cols = va.vectors();
    split_cols.insert(split_cols.end(), jv.begin(), jv.end());
    Matrix split = Matrix::from_columns(split_cols, n);
    std::vector<Vector> lift;
    for (std::size_t x = 0; x < na; ++x) {
        Vector c = solve_linear(split, q.i.column(x)).particular;
        Vector v(n);
        for (std::size_t r = 0; r < va.dim(); ++r) axpy(v, c[r], split_cols[r]);
        lift.push_back(std::move(v));
    }

    // Model positions come from a zero extension with the same base and l.
    StandardModel shape = force_build(make_extension(ExtensionInput::zero(q.a, q.l)));
    Matrix phi(n, n);
    for (std::size_t k = 0; k < nl; ++k)
        for (std::size_t r = 0; r < n; ++r) {
            phi(r, shape.z_pos[k]) = z[k][r];
            phi(r, shape.l_pos[k]) = sec[k][r];
        }
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t r = 0; r < n; ++r) phi(r, shape.a_pos[x]) = lift[x][r];
    Matrix phi_inv = inverse(phi);

    ExtensionInput in = ExtensionInput::zero(q.a, q.l);
    for (std::size_t m = 0; m < nl; ++m)
        for (std::size_t x = 0; x < na; ++x) {
            Vector y = phi_inv.apply(bracket(q.g.algebra, sec[m], lift[x]));
            for (std::size_t b = 0; b < na; ++b) in.xi[m](b, x) = y[shape.a_pos[b]];
            for (std::size_t k = 0; k < nl; ++k) in.gamma[m](k, x) = y[shape.z_pos[k]];
        }
    for (std::size_t p = 0; p < nl; ++p)
        for (std::size_t r = 0; r < nl; ++r) {
            Vector y = phi_inv.apply(bracket(q.g.algebra, sec[p], sec[r]));
            for (std::size_t k = 0; k < nl; ++k) in.epsilon[(p * nl + r) * nl + k] = y[shape.z_pos[k]];
        }

    Extraction e;
    e.data = make_extension(std::move(in));
    e.model = force_build(e.data);
    e.phi = std::move(phi);
    e.section = Matrix::from_columns(sec, n);
    e.lift = Matrix::from_columns(lift, n);
    e.dual = Matrix::from_columns(z, n);
    e.check = verify_extension_equivalence(quadruple_of(e.model), q, e.phi);
    return e;
}

Matrix tau_star(const ExtensionData& ext, const TauMap& tau) {
    const std::size_t na = ext.dim_a(), nl = ext.dim_l();
    if (tau.tau.rows() != na || tau.tau.cols() != nl) throw PreconditionError("tau must be dim a x dim l");
    Matrix t(nl, na);
    for (std::size_t k = 0; k < nl; ++k)
        for (std::size_t i = 0; i < na; ++i) t(k, i) = -ext.input.base.form.value(unit_vector(na, i), tau.tau.column(k));
    return t;
}

namespace {

Cochain tau_cochain(const ExtensionData& ext, const TauMap& tau) {
    return Cochain::from_function(ext.l, ext.a->space(), 1, Parity::Even,
                                  [&](const Tuple& t) { return tau.tau.column(t[0]); });
}

Cochain bracket_cochain(const std::shared_ptr<const LieSuperAlgebra>& a) {
    return Cochain::from_function(a, a->space(), 2, Parity::Even,
                                  [&](const Tuple& t) { return a->bracket_basis(t[0], t[1]); });
}

}  // namespace

TauResult tau_transform(const ExtensionData& ext, const TauMap& tau) {
    const auto& as = ext.a->space();
    const auto& l = ext.input.l;
    const std::size_t na = as.dim(), nl = l.dim();
    const Matrix ts = tau_star(ext, tau);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t m = 0; m < nl; ++m)
            if (tau.tau(i, m) != 0 && as.parity(i) != l.parity(m)) throw PreconditionError("tau must be even");

    ExtensionInput in = ext.input;
    for (std::size_t m = 0; m < nl; ++m) {
        const Vector tl = tau.tau.column(m);
        in.xi[m] = ext.input.xi[m] - ad(*ext.a, tl);
        for (std::size_t x = 0; x < na; ++x) {
            const Vector ax = unit_vector(na, x);
            Vector g = ext.input.gamma[m].column(x) + ts.apply(ext.input.xi[m].column(x)) -
                       ext.beta.evaluate({tl, ax}) - ts.apply(bracket(*ext.a, tl, ax));
            for (std::size_t k = 0; k < nl; ++k) in.gamma[m](k, x) = g[k];
        }
    }

    const Cochain tc = tau_cochain(ext, tau);
    Cochain eps = ext.epsilon + postcompose(ext.alpha, ts, ext.l_dual, ext.twist) -
                  wedge(ev_pairing(as, ext.l_dual), ext.gamma, tc) +
                  Scalar(1, 2) * wedge(pairing_from_cochain(ext.beta), tc, tc) +
                  postcompose(d_xi(tc, ext.input.xi), ts, ext.l_dual, ext.twist) +
                  Scalar(1, 2) * postcompose(wedge(pairing_from_cochain(bracket_cochain(ext.a)), tc, tc), ts,
                                             ext.l_dual, ext.twist);
    for (std::size_t p = 0; p < nl; ++p)
        for (std::size_t q = 0; q < nl; ++q) {
            Vector v = eps.value({p, q});
            for (std::size_t k = 0; k < nl; ++k) in.epsilon[(p * nl + q) * nl + k] = v[k];
        }

    TauResult r;
    r.data = make_extension(std::move(in));

    // phi(Z) = Z, phi(a) = a + tau*(a), phi(L) = L + tau(L) + b(L) with b chosen so phi(l) stays isotropic.
    StandardModel m1 = force_build(ext), m2 = force_build(r.data);
    const std::size_t n = m1.qf.algebra.dim();
    const auto& ds = m2.qf.algebra.space();
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;  // (k, m): coefficient of Z_k in b(L_m)
    for (std::size_t m = 0; m < nl; ++m)
        for (std::size_t k = 0; k < nl; ++k)
            if (ds.parity(m2.z_pos[k]) == l.parity(m)) unknowns.emplace_back(k, m);
    Matrix sys(nl * nl, unknowns.size());
    Vector rhs(nl * nl);
    for (std::size_t p = 0; p < nl; ++p)
        for (std::size_t q = 0; q < nl; ++q) {
            const std::size_t row = p * nl + q;
            rhs[row] = -ext.input.base.form.value(tau.tau.column(p), tau.tau.column(q));
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                auto [k, m] = unknowns[u];
                // w(L_p, b(L_q)) + w(b(L_p), L_q)
                if (m == q) sys(row, u) += m2.qf.form(m2.l_pos[p], m2.z_pos[k]);
                if (m == p) sys(row, u) += m2.qf.form(m2.z_pos[k], m2.l_pos[q]);
            }
        }
    Vector b = solve_linear(sys, rhs).particular;

    r.phi = Matrix(n, n);
    for (std::size_t k = 0; k < nl; ++k) r.phi(m2.z_pos[k], m1.z_pos[k]) = 1;
    for (std::size_t x = 0; x < na; ++x) {
        r.phi(m2.a_pos[x], m1.a_pos[x]) = 1;
        for (std::size_t k = 0; k < nl; ++k) r.phi(m2.z_pos[k], m1.a_pos[x]) = ts(k, x);
    }
    for (std::size_t m = 0; m < nl; ++m) {
        r.phi(m2.l_pos[m], m1.l_pos[m]) = 1;
        for (std::size_t x = 0; x < na; ++x) r.phi(m2.a_pos[x], m1.l_pos[m]) = tau.tau(x, m);
    }
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        auto [k, m] = unknowns[u];
        r.phi(m2.z_pos[k], m1.l_pos[m]) += b[u];
    }
    return r;
}

Cochain epsilon_by_intertwining(const ExtensionData& ext1, const ExtensionData& ext2, const TauMap& tau) {
    const Matrix ts = tau_star(ext1, tau);
    const auto& l = ext1.input.l;
    return Cochain::from_function(ext1.l, ext1.l_dual, 2, ext1.twist, [&](const Tuple& t) {
        const std::size_t p = t[0], q = t[1];
        const Vector tp = tau.tau.column(p), tq = tau.tau.column(q);
        Vector v = ext1.epsilon.value(t) + ts.apply(ext1.alpha.value(t)) - ext2.beta.evaluate({tp, tq}) +
                   Scalar(koszul(l.parity(p), l.parity(q))) * ext2.input.gamma[q].apply(tp) -
                   ext2.input.gamma[p].apply(tq);
        return v;
    });
}

std::size_t TableComparison::count(LineVerdict::Status s) const {
    std::size_t c = 0;
    for (const auto& l : lines) c += l.status == s;
    return c;
}

const char* to_string(LineVerdict::Status s) {
    switch (s) {
        case LineVerdict::Status::Match: return "match";
        case LineVerdict::Status::Mismatch: return "mismatch";
        case LineVerdict::Status::Conflict: return "conflict";
    }
    return "?";
}

TableComparison compare_table(const LieSuperAlgebra& alg, const std::vector<ReferenceLine>& reference) {
    const auto& s = alg.space();
    // Value of each line written as [e_min, e_max].
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Vector>>> seen;
    for (std::size_t r = 0; r < reference.size(); ++r) {
        const auto& line = reference[r];
        Vector v = line.value;
        if (line.left > line.right) v = Scalar(-koszul(s.parity(line.left), s.parity(line.right))) * v;
        seen[{std::min(line.left, line.right), std::max(line.left, line.right)}].emplace_back(r, v);
    }
    std::vector<bool> conflict(reference.size(), false);
    for (const auto& [key, entries] : seen)
        for (std::size_t a = 1; a < entries.size(); ++a)
            if (entries[a].second != entries[0].second)
                for (const auto& e : entries) conflict[e.first] = true;

    TableComparison out;
    for (std::size_t r = 0; r < reference.size(); ++r) {
        const auto& line = reference[r];
        Vector computed = alg.bracket_basis(line.left, line.right);
        LineVerdict v{line.text, format_combination(s, computed), LineVerdict::Status::Match};
        if (conflict[r])
            v.status = LineVerdict::Status::Conflict;
        else if (computed != line.value)
            v.status = LineVerdict::Status::Mismatch;
        out.lines.push_back(std::move(v));
    }
    return out;
}

}  // namespace sfx
