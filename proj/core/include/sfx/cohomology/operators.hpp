#ifndef SFX_COHOMOLOGY_OPERATORS_HPP
#define SFX_COHOMOLOGY_OPERATORS_HPP

#include <vector>

#include "sfx/cohomology/cochain.hpp"

namespace sfx {

enum class Coefficients { Trivial, Adjoint };

/*
 * For phi of degree n-1,
 *   d phi(x_1..x_n) = sum_{i<j} (-1)^{|x_j|(|x_{i+1}|+..+|x_{j-1}|) + j}
 *                         phi(x_1,..,x_{i-1},[x_i,x_j],x_{i+1},..,^x_j,..,x_n)
 *                   + sum_j (-1)^{|x_j|(|phi|+|x_1|+..+|x_{j-1}|) + j} x_j . phi(x_1,..,^x_j,..,x_n)
 * Adjoint coefficients require the coefficient space to be the source itself.
 * Throws PreconditionError past kMaxCochainDegree.
 */
Cochain d_ce(const Cochain& phi, Coefficients coefficients);

// Same formula with x . v := action[x] v for each source basis vector x.
Cochain d_xi(const Cochain& phi, const std::vector<Matrix>& action);

// m : U x V -> W with m(u_a, v_b) = sum_c coeff(a,b,c) w_c.
struct EquivariantPairing {
    SuperSpace u, v, w;
    Parity parity = Parity::Even;
    std::vector<Scalar> coeff;  // (a * v.dim() + b) * w.dim() + c

    const Scalar& at(std::size_t a, std::size_t b, std::size_t c) const {
        return coeff[(a * v.dim() + b) * w.dim() + c];
    }
    Vector apply(const Vector& x, const Vector& y) const;
};

/*
 * m(alpha ^ beta)(x_1..x_{n+k}) =
 *   sum_{sigma in sh(n,k)} theta(sigma, X) m(alpha(x_sigma(1)..x_sigma(n)), beta(x_sigma(n+1)..x_sigma(n+k)))
 */
Cochain wedge(const EquivariantPairing& m, const Cochain& alpha, const Cochain& beta);

// Ev : Hom(A, H) x A -> H, (f, a) -> f(a).
EquivariantPairing ev_pairing(const SuperSpace& a, const SuperSpace& h);

// [f, g] = f g - (-1)^{|f||g|} g f on End(V).
EquivariantPairing supercommutator_pairing(const SuperSpace& v);

// A bilinear map U x U -> W given as a 2-cochain (its source basis is U).
EquivariantPairing pairing_from_cochain(const Cochain& two_cochain);

}  // namespace sfx

#endif
