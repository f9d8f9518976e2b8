#include "sfx/io/notation.hpp"

#include <functional>

#include "sfx/errors.hpp"
#include "sfx/superlinalg/format.hpp"

namespace sfx {

namespace {

std::size_t lookup(const SuperSpace& s, const std::string& label) {
    if (auto i = s.find(label)) return *i;
    throw ParseError("unknown label '" + label + "'");
}

bool is_dual(const std::string& atom) { return !atom.empty() && atom.back() == '*'; }

std::size_t lookup_dual(const SuperSpace& s, const std::string& atom) {
    if (!is_dual(atom)) throw PreconditionError("expected a dual label, got '" + atom + "'");
    return lookup(s, atom.substr(0, atom.size() - 1));
}

std::string shape_error(const FlatMonomial& f, const char* expected) {
    std::string t;
    for (std::size_t k = 0; k < f.atoms.size(); ++k) {
        if (k) t += to_string(f.ops[k - 1]);
        t += f.atoms[k];
    }
    return "term '" + t + "' should look like " + expected;
}

// Iterate over nonscalar monomials; a bare scalar term must be zero.
template <class F>
void for_terms(std::string_view text, F&& f) {
    for (const auto& m : parse_expression(text).terms) {
        if (!m.tree) {
            if (m.coefficient != 0) throw PreconditionError("a bare number is only allowed as 0");
            continue;
        }
        f(m.coefficient, flatten(m.tree));
    }
}

// Contribution of c (X* op Y*) to the values at (x,y) and (y,x).
void add_pair(const SuperSpace& s, std::size_t x, std::size_t y, TensorOp op, const Scalar& c,
              const std::function<void(std::size_t, std::size_t, const Scalar&)>& add) {
    const int k = koszul(s.parity(x), s.parity(y));
    add(x, y, c * k);
    if (op == TensorOp::Wedge) add(y, x, -c);
}

bool super_antisymmetric(const SuperSpace& s, const std::function<Scalar(std::size_t, std::size_t)>& g) {
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i; j < s.dim(); ++j)
            if (g(i, j) != -koszul(s.parity(i), s.parity(j)) * g(j, i)) return false;
    return true;
}

// Terms c (X* op Y*) reproducing g.
std::vector<std::tuple<std::size_t, std::size_t, TensorOp, Scalar>> pair_terms(
    const SuperSpace& s, const std::function<Scalar(std::size_t, std::size_t)>& g) {
    std::vector<std::tuple<std::size_t, std::size_t, TensorOp, Scalar>> out;
    const bool anti = super_antisymmetric(s, g);
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = anti ? i : 0; j < s.dim(); ++j) {
            const Scalar v = g(i, j);
            if (v == 0) continue;
            const int k = koszul(s.parity(i), s.parity(j));
            if (!anti)
                out.emplace_back(i, j, TensorOp::Tensor, v * k);
            else if (i < j)
                out.emplace_back(i, j, TensorOp::Wedge, v * k);
            else
                out.emplace_back(i, j, TensorOp::Wedge, v / -2);
        }
    return out;
}

std::string pair_name(const SuperSpace& s, std::size_t i, std::size_t j, TensorOp op) {
    return s.label(i) + "*" + to_string(op) + s.label(j) + "*";
}

}  // namespace

Vector parse_vector(const SuperSpace& space, std::string_view text) {
    Vector v(space.dim());
    for_terms(text, [&](const Scalar& c, const FlatMonomial& f) {
        if (f.atoms.size() != 1) throw PreconditionError(shape_error(f, "a single basis label"));
        v[lookup(space, f.atoms[0])] += c;
    });
    return v;
}

Matrix parse_two_form(const SuperSpace& space, std::string_view text) {
    Matrix g(space.dim(), space.dim());
    for_terms(text, [&](const Scalar& c, const FlatMonomial& f) {
        if (f.atoms.size() != 2) throw PreconditionError(shape_error(f, "X*∧Y*"));
        add_pair(space, lookup_dual(space, f.atoms[0]), lookup_dual(space, f.atoms[1]), f.ops[0], c,
                 [&](std::size_t i, std::size_t j, const Scalar& v) { g(i, j) += v; });
    });
    return g;
}

std::string format_two_form(const SuperSpace& space, const Matrix& gram) {
    std::vector<std::string> names;
    Vector coeff;
    for (auto [i, j, op, c] : pair_terms(space, [&](std::size_t i, std::size_t j) { return gram(i, j); })) {
        names.push_back(pair_name(space, i, j, op));
        coeff.push_back(c);
    }
    return format_combination(names, coeff);
}

Matrix parse_linear_map(const SuperSpace& source, const SuperSpace& target, std::string_view text) {
    Matrix m(target.dim(), source.dim());
    for_terms(text, [&](const Scalar& c, const FlatMonomial& f) {
        if (f.atoms.size() != 2 || f.ops[0] != TensorOp::Tensor)
            throw PreconditionError(shape_error(f, "target⊗source*"));
        m(lookup(target, f.atoms[0]), lookup_dual(source, f.atoms[1])) += c;
    });
    return m;
}

std::string format_linear_map(const SuperSpace& source, const SuperSpace& target, const Matrix& m) {
    std::vector<std::string> names;
    Vector coeff;
    for (std::size_t j = 0; j < source.dim(); ++j)
        for (std::size_t i = 0; i < target.dim(); ++i)
            if (m(i, j) != 0) {
                names.push_back(target.label(i) + "⊗" + source.label(j) + "*");
                coeff.push_back(m(i, j));
            }
    return format_combination(names, coeff);
}

Matrix parse_endomorphism(const LieSuperAlgebra& a, std::string_view text) {
    const auto& s = a.space();
    Matrix m(s.dim(), s.dim());
    for_terms(text, [&](const Scalar& c, const FlatMonomial& f) {
        if (f.atoms.size() == 1 && f.atoms[0].rfind("ad(", 0) == 0) {
            const std::string inner = f.atoms[0].substr(3, f.atoms[0].size() - 4);
            m = m + c * ad(a, unit_vector(s.dim(), lookup(s, inner)));
            return;
        }
        if (f.atoms.size() != 2 || f.ops[0] != TensorOp::Tensor)
            throw PreconditionError(shape_error(f, "e_i⊗e_j* or ad(x)"));
        m(lookup(s, f.atoms[0]), lookup_dual(s, f.atoms[1])) += c;
    });
    return m;
}

std::string format_endomorphism(const SuperSpace& a, const Matrix& m) { return format_linear_map(a, a, m); }

std::vector<Matrix> parse_gamma(const SuperSpace& a, const SuperSpace& l, std::string_view text) {
    std::vector<Matrix> g(l.dim(), Matrix(l.dim(), a.dim()));
    for_terms(text, [&](const Scalar& c, const FlatMonomial& f) {
        if (f.atoms.size() != 3) throw PreconditionError(shape_error(f, "L_k*⊗e_i*⊗L_m*"));
        const std::size_t k = lookup_dual(l, f.atoms[0]), i = lookup_dual(a, f.atoms[1]),
                          m = lookup_dual(l, f.atoms[2]);
        g[m](k, i) += -minus_one_pow(bit(a.parity(i))) * c;
    });
    return g;
}

std::string format_gamma(const SuperSpace& a, const SuperSpace& l, const std::vector<Matrix>& gamma) {
    std::vector<std::string> names;
    Vector coeff;
    for (std::size_t m = 0; m < l.dim(); ++m)
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t k = 0; k < l.dim(); ++k)
                if (gamma.at(m)(k, i) != 0) {
                    names.push_back(l.label(k) + "*⊗" + a.label(i) + "*⊗" + l.label(m) + "*");
                    coeff.push_back(-minus_one_pow(bit(a.parity(i))) * gamma[m](k, i));
                }
    return format_combination(names, coeff);
}

std::vector<Scalar> parse_two_cochain(const SuperSpace& source, const SuperSpace& values, std::string_view text) {
    const std::size_t n = source.dim(), w = values.dim();
    std::vector<Scalar> flat(n * n * w);
    for_terms(text, [&](const Scalar& c, const FlatMonomial& f) {
        if (f.atoms.size() != 3) throw PreconditionError(shape_error(f, "V⊗(X*∧Y*)"));
        const std::size_t k = lookup(values, f.atoms[0]);
        add_pair(source, lookup_dual(source, f.atoms[1]), lookup_dual(source, f.atoms[2]), f.ops[1], c,
                 [&](std::size_t i, std::size_t j, const Scalar& v) { flat[(i * n + j) * w + k] += v; });
    });
    return flat;
}

std::string format_two_cochain(const SuperSpace& source, const SuperSpace& values, const std::vector<Scalar>& flat,
                               TensorOp outer) {
    const std::size_t n = source.dim(), w = values.dim();
    std::vector<std::string> names;
    Vector coeff;
    for (std::size_t k = 0; k < w; ++k)
        for (auto [i, j, op, c] : pair_terms(source, [&](std::size_t i, std::size_t j) { return flat[(i * n + j) * w + k]; })) {
            names.push_back(values.label(k) + to_string(outer) + "(" + pair_name(source, i, j, op) + ")");
            coeff.push_back(c);
        }
    return format_combination(names, coeff);
}

}  // namespace sfx
