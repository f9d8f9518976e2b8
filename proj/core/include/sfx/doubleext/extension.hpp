#ifndef SFX_DOUBLEEXT_EXTENSION_HPP
#define SFX_DOUBLEEXT_EXTENSION_HPP

#include <memory>
#include <string>
#include <vector>

#include "sfx/cohomology.hpp"
#include "sfx/errors.hpp"
#include "sfx/symplectic.hpp"

namespace sfx {

enum class ModelKind { Orthosymplectic, Periplectic };

const char* to_string(ModelKind k);

/*
 * Raw extension data over a quasi-Frobenius base a and an abelian l.
 *   xi[m]      : a -> a,   the endomorphism xi(L_m)
 *   gamma[m]   : a -> l*,  dim l x dim a, column i is gamma(L_m)(a_i) in the dual basis L_k*
 *   epsilon    : (p * dim l + q) * dim l + k  ->  coefficient of L_k* in eps(L_p, L_q)
 */
struct ExtensionInput {
    QuasiFrobenius base;
    SuperSpace l;
    std::vector<Matrix> xi;
    std::vector<Matrix> gamma;
    std::vector<Scalar> epsilon;

    static ExtensionInput zero(QuasiFrobenius base, SuperSpace l);
};

// Input plus the derived maps, all exposed as cochains.
struct ExtensionData {
    ExtensionInput input;
    ModelKind kind = ModelKind::Orthosymplectic;
    Parity twist = Parity::Even;  // |omega_a|; parity of gamma, eps, beta as cochains

    std::shared_ptr<const LieSuperAlgebra> a;  // base algebra
    std::shared_ptr<const LieSuperAlgebra> l;  // abelian on input.l
    SuperSpace l_dual;                          // L_k*, parity |L_k|
    HomSpace end_a;                             // End(a)
    HomSpace hom_a_ldual;                       // Hom(a, l*)

    Cochain xi;       // C^1(l, End a)
    Cochain gamma;    // C^1(l, Hom(a, l*))
    Cochain epsilon;  // C^2(l, l*)
    Cochain beta;     // C^2(a, l*), derived
    Cochain alpha;    // C^2(l, a), derived

    std::size_t dim_a() const { return a->dim(); }
    std::size_t dim_l() const { return l->dim(); }
};

// Validates shapes and derives beta and alpha. Throws PreconditionError on bad shapes
// or a degenerate base form.
ExtensionData make_extension(ExtensionInput input);

Cochain derive_beta(const ExtensionData& ext);
Cochain derive_alpha(const ExtensionData& ext);

// Components that would make the assembled bracket odd somewhere.
std::vector<std::string> parity_issues(const ExtensionData& ext);

struct ConditionResult {
    std::string name;
    std::string equation;
    bool passed = true;
    std::vector<std::string> witnesses;
    // Every evaluated component in a fixed order; all zero iff passed.
    Vector residual;
};

struct ConditionReport {
    std::vector<ConditionResult> results;
    bool ok() const;
    const ConditionResult& get(const std::string& name) const;
    std::vector<std::string> failed() const;
};

// Condition names in report order.
const std::vector<std::string>& condition_names();

ConditionReport check_conditions(const ExtensionData& ext);

class ParityMismatchError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class ConditionFailureError : public ValidationError {
public:
    ConditionFailureError(const std::string& what, ConditionReport report)
        : ValidationError(what), report_(std::move(report)) {}
    const ConditionReport& report() const { return report_; }

private:
    ConditionReport report_;
};

}  // namespace sfx

#endif
