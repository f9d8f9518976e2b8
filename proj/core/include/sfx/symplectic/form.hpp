#ifndef SFX_SYMPLECTIC_FORM_HPP
#define SFX_SYMPLECTIC_FORM_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "sfx/liesuper.hpp"

namespace sfx {

// Bilinear form with Gram matrix gram(i,j) = omega(e_i, e_j).
class SuperForm {
public:
    SuperForm() = default;
    SuperForm(SuperSpace space, Matrix gram, Parity parity);

    static SuperForm zero(const SuperSpace& space, Parity parity);

    const SuperSpace& space() const { return space_; }
    const Matrix& gram() const { return gram_; }
    Parity parity() const { return parity_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return gram_(i, j); }
    Scalar value(const Vector& x, const Vector& y) const;

    friend bool operator==(const SuperForm& a, const SuperForm& b);

private:
    SuperSpace space_;
    Matrix gram_;
    Parity parity_ = Parity::Even;
};

struct FormIssue {
    enum class Kind { Homogeneity, Antisymmetry };
    Kind kind;
    std::size_t i, j;
};

const char* to_string(FormIssue::Kind k);

// Homogeneity w.r.t. the declared parity and omega(x,y) = -(-1)^{|x||y|} omega(y,x).
std::vector<FormIssue> form_issues(const SuperForm& form);

bool is_nondegenerate(const SuperForm& form);

struct ClosednessWitness {
    std::size_t a, b, c;
    Scalar residual;
};

// (-1)^{|a||c|} w(a,[b,c]) + (-1)^{|c||b|} w(c,[a,b]) + (-1)^{|b||a|} w(b,[c,a]) on basis triples.
Scalar closedness_residual(const LieSuperAlgebra& alg, const SuperForm& form, std::size_t a, std::size_t b,
                           std::size_t c);
std::vector<ClosednessWitness> closedness_failures(const LieSuperAlgebra& alg, const SuperForm& form);

struct QuasiFrobenius {
    LieSuperAlgebra algebra;
    SuperForm form;
};

struct QuasiFrobeniusReport {
    ValidationReport algebra;
    std::vector<FormIssue> form;
    bool nondegenerate = false;
    std::vector<ClosednessWitness> closedness;
    bool ok() const { return algebra.ok() && form.empty() && nondegenerate && closedness.empty(); }
};

QuasiFrobeniusReport validate(const QuasiFrobenius& qf);

}  // namespace sfx

#endif
