#include "sfx/cohomology/operators.hpp"

#include <stdexcept>

#include "sfx/errors.hpp"

namespace sfx {

namespace {

Tuple without(const Tuple& t, std::size_t slot) {
    Tuple r;
    for (std::size_t s = 0; s < t.size(); ++s)
        if (s != slot) r.push_back(t[s]);
    return r;
}

// action == nullptr means trivial coefficients.
Cochain differential(const Cochain& phi, const std::vector<Matrix>* action) {
    const int n = phi.degree() + 1;
    if (n > kMaxCochainDegree) throw PreconditionError("differential: degree " + std::to_string(n) + " is not supported");
    const LieSuperAlgebra& g = phi.source();
    const auto& sp = g.space();
    const std::size_t dim = g.dim(), m = phi.coefficients().dim();
    if (action) {
        if (action->size() != dim) throw std::invalid_argument("differential: one action matrix per basis vector");
        for (const auto& a : *action)
            if (a.rows() != m || a.cols() != m) throw std::invalid_argument("differential: action matrix shape");
    }
    Cochain out(phi.source_ptr(), phi.coefficients(), n, phi.parity());
    for (std::size_t f = 0; f < out.tuple_count(); ++f) {
        Tuple x = out.decode(f);
        Vector acc(m);
        // Bracket insertion, 1-based positions i < j.
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                std::size_t xi = x[static_cast<std::size_t>(i - 1)], xj = x[static_cast<std::size_t>(j - 1)];
                int between = 0;
                for (int l = i + 1; l < j; ++l) between += bit(sp.parity(x[static_cast<std::size_t>(l - 1)]));
                int sign = minus_one_pow(bit(sp.parity(xj)) * between + j);
                Tuple rest = without(x, static_cast<std::size_t>(j - 1));
                for (std::size_t k = 0; k < dim; ++k) {
                    const Scalar& c = g.c(xi, xj, k);
                    if (sgn(c) == 0) continue;
                    rest[static_cast<std::size_t>(i - 1)] = k;
                    axpy(acc, sign * c, phi.value(rest));
                }
            }
        if (action) {
            int before = 0;
            for (int j = 1; j <= n; ++j) {
                std::size_t xj = x[static_cast<std::size_t>(j - 1)];
                int sign = minus_one_pow(bit(sp.parity(xj)) * (bit(phi.parity()) + before) + j);
                axpy(acc, Scalar(sign), (*action)[xj].apply(phi.value(without(x, static_cast<std::size_t>(j - 1)))));
                before += bit(sp.parity(xj));
            }
        }
        out.set(x, acc);
    }
    return out;
}

}  // namespace

Cochain d_ce(const Cochain& phi, Coefficients coefficients) {
    if (coefficients == Coefficients::Trivial) return differential(phi, nullptr);
    const LieSuperAlgebra& g = phi.source();
    if (!(phi.coefficients() == g.space()))
        throw PreconditionError("d_ce: adjoint coefficients need values in the source algebra");
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < g.dim(); ++i) action.push_back(ad(g, unit_vector(g.dim(), i)));
    return differential(phi, &action);
}

Cochain d_xi(const Cochain& phi, const std::vector<Matrix>& action) { return differential(phi, &action); }

Vector EquivariantPairing::apply(const Vector& x, const Vector& y) const {
    if (x.size() != u.dim() || y.size() != v.dim()) throw std::invalid_argument("pairing: argument dimension");
    Vector out(w.dim());
    for (std::size_t a = 0; a < u.dim(); ++a) {
        if (sgn(x[a]) == 0) continue;
        for (std::size_t b = 0; b < v.dim(); ++b) {
            if (sgn(y[b]) == 0) continue;
            Scalar f = x[a] * y[b];
            for (std::size_t c = 0; c < w.dim(); ++c)
                if (sgn(at(a, b, c)) != 0) out[c] += f * at(a, b, c);
        }
    }
    return out;
}

Cochain wedge(const EquivariantPairing& m, const Cochain& alpha, const Cochain& beta) {
    const int n = alpha.degree(), k = beta.degree();
    if (n + k > kMaxCochainDegree) throw PreconditionError("wedge: degree overflow");
    if (!(alpha.source().space() == beta.source().space())) throw std::invalid_argument("wedge: different sources");
    if (!(alpha.coefficients() == m.u) || !(beta.coefficients() == m.v))
        throw std::invalid_argument("wedge: coefficient spaces do not match the pairing");
    const auto& sp = alpha.source().space();
    const auto perms = shuffles(n, k);
    Cochain out(alpha.source_ptr(), m.w, n + k, alpha.parity() + beta.parity() + m.parity);
    for (std::size_t f = 0; f < out.tuple_count(); ++f) {
        Tuple x = out.decode(f);
        std::vector<Parity> par;
        for (auto i : x) par.push_back(sp.parity(i));
        Vector acc(m.w.dim());
        for (const auto& s : perms) {
            Tuple left, right;
            for (int p = 1; p <= n; ++p) left.push_back(x[static_cast<std::size_t>(s(p) - 1)]);
            for (int p = n + 1; p <= n + k; ++p) right.push_back(x[static_cast<std::size_t>(s(p) - 1)]);
            axpy(acc, Scalar(theta_sign(s, par)), m.apply(alpha.value(left), beta.value(right)));
        }
        out.set(x, acc);
    }
    return out;
}

EquivariantPairing ev_pairing(const SuperSpace& a, const SuperSpace& h) {
    HomSpace hom = hom_space(a, h);
    EquivariantPairing p{hom.space, a, h, Parity::Even, {}};
    p.coeff.resize(hom.space.dim() * a.dim() * h.dim());
    for (std::size_t k = 0; k < h.dim(); ++k)
        for (std::size_t i = 0; i < a.dim(); ++i)
            p.coeff[(hom.index(k, i) * a.dim() + i) * h.dim() + k] = 1;
    return p;
}

EquivariantPairing supercommutator_pairing(const SuperSpace& v) {
    HomSpace e = hom_space(v, v);
    const std::size_t d = e.space.dim(), n = v.dim();
    EquivariantPairing p{e.space, e.space, e.space, Parity::Even, {}};
    p.coeff.resize(d * d * d);
    // E_ab E_cd = delta_bc E_ad.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t dd = 0; dd < n; ++dd) {
                    std::size_t f = e.index(a, b), g = e.index(c, dd);
                    int s = koszul(e.space.parity(f), e.space.parity(g));
                    if (b == c) p.coeff[(f * d + g) * d + e.index(a, dd)] += 1;
                    if (dd == a) p.coeff[(f * d + g) * d + e.index(c, b)] -= s;
                }
    return p;
}

EquivariantPairing pairing_from_cochain(const Cochain& two) {
    if (two.degree() != 2) throw std::invalid_argument("pairing_from_cochain needs a 2-cochain");
    const auto& u = two.source().space();
    EquivariantPairing p{u, u, two.coefficients(), two.parity(), {}};
    p.coeff.resize(u.dim() * u.dim() * p.w.dim());
    for (std::size_t a = 0; a < u.dim(); ++a)
        for (std::size_t b = 0; b < u.dim(); ++b) {
            Vector v = two.value({a, b});
            for (std::size_t c = 0; c < p.w.dim(); ++c) p.coeff[(a * u.dim() + b) * p.w.dim() + c] = v[c];
        }
    return p;
}

}  // namespace sfx
