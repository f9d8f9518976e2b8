#ifndef SFX_SUPERLINALG_LINSOLVE_HPP
#define SFX_SUPERLINALG_LINSOLVE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sfx/superlinalg/matrix.hpp"

namespace sfx {

struct Echelon {
    Matrix reduced;                   // RREF, zero rows removed
    std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);

// Basis of {x : a x = 0}, one vector per free column, in column order.
std::vector<Vector> nullspace(const Matrix& a);

struct SolutionSet {
    Vector particular;            // free variables set to zero
    std::vector<Vector> kernel;   // nullspace basis of A
};

class InconsistentSystem : public std::runtime_error {
public:
    InconsistentSystem(std::size_t row, const std::string& what)
        : std::runtime_error(what), row_(row) {}
    // Index (into the original A) of an equation that cannot be satisfied.
    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

/*
 * Solves A x = b exactly. Forward elimination is fraction-free (Bareiss) on
 * the integer-scaled augmented matrix; back substitution is rational.
 * Throws InconsistentSystem when b is outside the column space.
 */
SolutionSet solve_linear(const Matrix& a, const Vector& b);

// Unique solution of a square non-singular system; throws std::domain_error otherwise.
Vector solve_unique(const Matrix& a, const Vector& b);

Matrix inverse(const Matrix& a);

}  // namespace sfx

#endif
