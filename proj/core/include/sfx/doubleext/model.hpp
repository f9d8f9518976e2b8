#ifndef SFX_DOUBLEEXT_MODEL_HPP
#define SFX_DOUBLEEXT_MODEL_HPP

#include <string>
#include <vector>

#include "sfx/doubleext/extension.hpp"

namespace sfx {

/*
 * d = l* + a + l (orthosymplectic) or Pi(l*) + a + l (periplectic), basis in
 * canonical order; *_pos map block indices to positions in d.
 */
struct StandardModel {
    ExtensionData data;
    QuasiFrobenius qf;
    std::vector<std::size_t> z_pos, a_pos, l_pos;

    ModelKind kind() const { return data.kind; }
    Subspace dual_block() const;
    Subspace a_block() const;
    Subspace l_block() const;
};

// Assembles d without checking anything (used for perturbation studies).
StandardModel force_build(const ExtensionData& ext);

// Require |omega_a| even (resp. odd), an even bracket, and all conditions.
StandardModel build_orthosymplectic(const ExtensionData& ext);
StandardModel build_periplectic(const ExtensionData& ext);
StandardModel build(const ExtensionData& ext);

/*
 * A double extension given abstractly:
 *   i : columns are representatives in j-perp of the images of the base basis
 *   p : dim l x dim g, the composite g -> g/j -> l
 */
struct ExtensionQuadruple {
    QuasiFrobenius g;
    Subspace j;
    QuasiFrobenius a;
    Matrix i;
    SuperSpace l;
    Matrix p;
};

std::vector<std::string> quadruple_issues(const ExtensionQuadruple& q);

ExtensionQuadruple quadruple_of(const StandardModel& m);

/*
 * Quadruple read off an abstract g and an isotropic homogeneous ideal j:
 * a = j-perp/j with the induced form, l = g/j-perp labelled by the basis vectors
 * outside j-perp. Throws PreconditionError unless j is central.
 */
ExtensionQuadruple quadruple_from_ideal(const QuasiFrobenius& g, const Subspace& j);

struct EquivalenceReport {
    bool even = true;
    bool invertible = true;
    bool bracket = true;
    bool form = true;
    bool ideal = true;
    bool inclusion = true;
    bool projection = true;
    std::vector<std::string> witnesses;
    bool ok() const { return even && invertible && bracket && form && ideal && inclusion && projection; }
};

// phi : g1 -> g2 (matrix dim g2 x dim g1).
EquivalenceReport verify_extension_equivalence(const ExtensionQuadruple& q1, const ExtensionQuadruple& q2,
                                               const Matrix& phi);
EquivalenceReport verify_equivalence(const StandardModel& m1, const StandardModel& m2, const Matrix& phi);

struct Extraction {
    ExtensionData data;
    StandardModel model;  // rebuilt from data
    Matrix phi;           // model -> g, columns p*(Z_k), t(a_i), s(L_m) at the model's positions
    Matrix section;       // s, dim g x dim l, isotropic
    Matrix lift;          // t, dim g x dim a
    Matrix dual;          // p*, dim g x dim l
    EquivalenceReport check;
};

// Throws PreconditionError if the quadruple is invalid.
Extraction extract_standard(const ExtensionQuadruple& q);

// tau : l -> a as a dim a x dim l matrix.
struct TauMap {
    Matrix tau;
};

// tau*(a)(L) = -omega_a(a, tau(L)); dim l x dim a.
Matrix tau_star(const ExtensionData& ext, const TauMap& tau);

struct TauResult {
    ExtensionData data;
    Matrix phi;  // build(ext1) -> build(ext2)
};

TauResult tau_transform(const ExtensionData& ext, const TauMap& tau);

// eps_2 obtained by equating the l*-parts of phi([L1,L2]_1) = [phi L1, phi L2]_2 directly.
Cochain epsilon_by_intertwining(const ExtensionData& ext1, const ExtensionData& ext2, const TauMap& tau);

// Comparison of a computed algebra with a printed bracket list.
struct ReferenceLine {
    std::string text;
    std::size_t left, right;
    Vector value;
};

struct LineVerdict {
    std::string text;
    std::string computed;
    enum class Status { Match, Mismatch, Conflict } status;
};

struct TableComparison {
    std::vector<LineVerdict> lines;
    std::size_t count(LineVerdict::Status s) const;
};

TableComparison compare_table(const LieSuperAlgebra& alg, const std::vector<ReferenceLine>& reference);

const char* to_string(LineVerdict::Status s);

}  // namespace sfx

#endif
