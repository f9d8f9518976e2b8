#include "sfx/superlinalg/linsolve.hpp"

#include <string>
#include <utility>

namespace sfx {

Echelon rref(const Matrix& a) {
    Matrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& a) {
    Echelon e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(a.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

SolutionSet solve_linear(const Matrix& a, const Vector& b) {
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m) throw std::invalid_argument("right-hand side length mismatch");

    // Integer-scaled augmented matrix [A | b].
    std::vector<std::vector<mpz_class>> w(m, std::vector<mpz_class>(n + 1));
    std::vector<std::size_t> origin(m);
    for (std::size_t i = 0; i < m; ++i) {
        origin[i] = i;
        mpz_class l = 1;
        for (std::size_t j = 0; j <= n; ++j) {
            const Scalar& x = j < n ? a(i, j) : b[i];
            mpz_class d = x.get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j <= n; ++j) {
            const Scalar& x = j < n ? a(i, j) : b[i];
            w[i][j] = x.get_num() * (l / x.get_den());
        }
    }

    // Bareiss forward elimination; every division below is exact.
    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && w[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(w[p], w[r]);
        std::swap(origin[p], origin[r]);
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j <= n; ++j) {
                mpz_class t = w[r][c] * w[i][j] - w[i][c] * w[r][j];
                mpz_divexact(w[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w[i][c] = 0;
        }
        prev = w[r][c];
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (w[i][n] != 0)
            throw InconsistentSystem(origin[i], "inconsistent linear system: equation " + std::to_string(origin[i]) +
                                                    " has no solution");

    SolutionSet out;
    out.particular.assign(n, Scalar(0));
    for (std::size_t k = r; k-- > 0;) {
        std::size_t c = pivots[k];
        Scalar acc(w[k][n]);
        for (std::size_t j = c + 1; j < n; ++j)
            if (w[k][j] != 0 && sgn(out.particular[j]) != 0) acc -= Scalar(w[k][j]) * out.particular[j];
        out.particular[c] = acc / Scalar(w[k][c]);
    }
    out.kernel = nullspace(a);
    return out;
}

Vector solve_unique(const Matrix& a, const Vector& b) {
    if (a.rows() != a.cols()) throw std::domain_error("solve_unique needs a square matrix");
    SolutionSet s = solve_linear(a, b);
    if (!s.kernel.empty()) throw std::domain_error("singular system");
    return s.particular;
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::domain_error("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    Echelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

}  // namespace sfx
