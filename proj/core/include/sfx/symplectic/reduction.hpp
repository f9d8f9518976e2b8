#ifndef SFX_SYMPLECTIC_REDUCTION_HPP
#define SFX_SYMPLECTIC_REDUCTION_HPP

#include <string>
#include <vector>

#include "sfx/errors.hpp"
#include "sfx/symplectic/form.hpp"

namespace sfx {

class DegenerateFormError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class TrivialIntersectionError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// {x : omega(x, s) = 0}; throws DegenerateFormError for a degenerate form.
Subspace orthogonal(const SuperForm& form, const Subspace& s);

struct IdealClassification {
    bool isotropic = false;      // j in j-perp
    bool lagrangian = false;     // j = j-perp
    bool degenerate = false;     // j meets j-perp nontrivially
    bool nondegenerate = false;  // j meets j-perp trivially
    std::vector<std::string> labels() const;
};

// Throws PreconditionError unless j is a homogeneous ideal.
IdealClassification classify_ideal(const QuasiFrobenius& qf, const Subspace& j);

// [j,j] = 0 for an isotropic homogeneous ideal; a false result means an internal inconsistency.
bool isotropic_ideal_is_abelian_check(const QuasiFrobenius& qf, const Subspace& j);

struct Reduction {
    QuasiFrobenius reduced;
    Subspace ideal;
    Subspace perp;
    Quotient quotient;  // perp / ideal with its representatives
};

// j-perp / j with the induced form. Throws PreconditionError unless j is an isotropic homogeneous ideal.
Reduction reduce(const QuasiFrobenius& qf, const Subspace& j);

// z meet z-perp for the center z; throws TrivialIntersectionError when it is zero.
Subspace balanced_ideal(const QuasiFrobenius& qf);

}  // namespace sfx

#endif
