#ifndef SFX_LIESUPER_ALGEBRA_HPP
#define SFX_LIESUPER_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sfx/superlinalg.hpp"

namespace sfx {

/*
 * Structure constants c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k.
 * Both (i,j) and (j,i) are stored; the axioms are checked by validate(),
 * not assumed by the storage.
 */
class LieSuperAlgebra {
public:
    LieSuperAlgebra() = default;
    explicit LieSuperAlgebra(SuperSpace space);  // abelian
    LieSuperAlgebra(SuperSpace space, std::vector<Scalar> constants);

    // Fills [e_i,e_j] and its super-antisymmetric image for each entry.
    // Throws PreconditionError if an entry contradicts an earlier one.
    static LieSuperAlgebra from_brackets(SuperSpace space,
                                         const std::vector<std::tuple<std::size_t, std::size_t, Vector>>& brackets);

    const SuperSpace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim() + j) * dim() + k]; }
    Vector bracket_basis(std::size_t i, std::size_t j) const;
    const std::vector<Scalar>& constants() const { return c_; }
    bool is_abelian() const;

    friend bool operator==(const LieSuperAlgebra& a, const LieSuperAlgebra& b);

private:
    SuperSpace space_;
    std::vector<Scalar> c_;
};

// Bilinear extension; throws std::invalid_argument on dimension mismatch.
Vector bracket(const LieSuperAlgebra& alg, const Vector& x, const Vector& y);

// Matrix of ad_x.
Matrix ad(const LieSuperAlgebra& alg, const Vector& x);

// Same algebra written in a new basis: columns of `basis` (old coordinates) are the new basis vectors.
LieSuperAlgebra change_basis(const LieSuperAlgebra& alg, const SuperSpace& new_space, const Matrix& basis);

struct AxiomViolation {
    enum class Kind { Grading, Antisymmetry, Jacobi };
    Kind kind;
    std::vector<std::size_t> indices;  // basis pair or triple
    Vector residual;
};

struct ValidationReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
    std::size_t count(AxiomViolation::Kind k) const;
};

const char* to_string(AxiomViolation::Kind k);

ValidationReport validate(const LieSuperAlgebra& alg);

// Signed Jacobi sum on a basis triple.
Vector jacobi_residual(const LieSuperAlgebra& alg, std::size_t i, std::size_t j, std::size_t k);

}  // namespace sfx

#endif
