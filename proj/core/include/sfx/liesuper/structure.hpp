#ifndef SFX_LIESUPER_STRUCTURE_HPP
#define SFX_LIESUPER_STRUCTURE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "sfx/liesuper/algebra.hpp"

namespace sfx {

struct DerivationReport {
    // Basis pairs (i,j) where some homogeneous part fails the Leibniz rule.
    std::vector<std::pair<std::size_t, std::size_t>> witnesses;
    bool ok() const { return witnesses.empty(); }
};

// Checks d[x,y] = [dx,y] + (-1)^{|d||x|}[x,dy] separately for the even and odd parts of d.
DerivationReport is_derivation(const LieSuperAlgebra& alg, const GradedLinearMap& d);

Subspace center(const LieSuperAlgebra& alg);

// [s, alg] is contained in s.
bool is_ideal(const LieSuperAlgebra& alg, const Subspace& s);
bool is_homogeneous_ideal(const LieSuperAlgebra& alg, const Subspace& s);
bool is_subalgebra(const LieSuperAlgebra& alg, const Subspace& s);

// [s, s] = 0
bool is_abelian(const LieSuperAlgebra& alg, const Subspace& s);

/*
 * sub / j for a subalgebra sub and an ideal j of sub (sub = whole space gives
 * the ordinary quotient). Representatives are the RREF of sub reduced modulo j,
 * which are canonical basis vectors whenever sub is the whole space.
 */
struct Quotient {
    LieSuperAlgebra algebra;
    Subspace ideal;
    Subspace sub;
    Matrix representatives;  // ambient dim x quotient dim, columns are lifts
    Subspace rep_span;

    // Class of x (which must lie in sub) in quotient coordinates.
    Vector project(const Vector& x) const;
    // Projection matrix (quotient dim x ambient dim) restricted to sub's coordinates; exact on sub.
    Matrix projection_matrix() const;
};

Quotient quotient(const LieSuperAlgebra& alg, const Subspace& j);
Quotient subquotient(const LieSuperAlgebra& alg, const Subspace& sub, const Subspace& j);

// g, [g,g], [g,[g,g]], ... until it stabilizes.
std::vector<Subspace> lower_central_series(const LieSuperAlgebra& alg);

// Zero algebra 0, abelian 1, otherwise the length of the series down to zero; nullopt if it stalls.
std::optional<int> nilpotency_class(const LieSuperAlgebra& alg);

}  // namespace sfx

#endif
