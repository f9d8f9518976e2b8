#include <gtest/gtest.h>

#include "oracle.hpp"

namespace sfx {
namespace {

QuasiFrobenius qf(const std::string& name) { return oracle::corpus_algebra(name).quasi_frobenius(); }

Subspace span_of(const SuperSpace& s, const std::vector<std::string>& labels) {
    std::vector<std::size_t> idx;
    for (const auto& l : labels) idx.push_back(s.index_of(l));
    return Subspace::coordinate(s, idx);
}

std::vector<QuasiFrobenius> corpus_qf() {
    std::vector<QuasiFrobenius> out;
    for (const auto& n : oracle::corpus_names(".alg")) out.push_back(qf(n));
    for (const auto& n : {"c3a-amended.ext", "c112a-amended.ext", "2a11.ext"})
        out.push_back(build(oracle::corpus_data(n)).qf);
    return out;
}

TEST(Form, CorpusFormsAreQuasiFrobenius) {
    for (const auto& n : oracle::corpus_names(".alg")) {
        auto q = qf(n);
        auto rep = validate(q);
        EXPECT_TRUE(rep.ok()) << n;
        EXPECT_TRUE(oracle::closed(q.algebra, q.form.gram())) << n;
        EXPECT_EQ(oracle::rank(q.form.gram()), q.algebra.dim()) << n;
    }
}

TEST(Form, WedgeConventionValues) {
    auto a = qf("c3a.alg");
    const auto& s = a.algebra.space();
    EXPECT_EQ(a.form(s.index_of("e1"), s.index_of("e2")), 2);
    EXPECT_EQ(a.form(s.index_of("e2"), s.index_of("e1")), -2);
    EXPECT_EQ(a.form(s.index_of("e3"), s.index_of("e4")), 1);
    EXPECT_EQ(a.form(s.index_of("e4"), s.index_of("e3")), 1);
    auto b = qf("c112a.alg");
    EXPECT_EQ(b.form(2, 2), 1);
    EXPECT_EQ(b.form(3, 3), 1);
    auto p = qf("2a11.alg");
    EXPECT_EQ(p.form.parity(), Parity::Odd);
    EXPECT_EQ(p.form(1, 2), 1);
    EXPECT_EQ(p.form(0, 3), -1);
}

TEST(Form, AnyFormOnAnAbelianAlgebraIsClosed) {
    oracle::Random rng(2);
    LieSuperAlgebra ab(SuperSpace({"x", "y"}, {"z", "w"}));
    for (int t = 0; t < 10; ++t) {
        SuperForm f(ab.space(), rng.matrix(4, 4), Parity::Even);
        EXPECT_TRUE(closedness_failures(ab, f).empty());
    }
}

TEST(Form, RandomOddFormOnC3AHasAWitness) {
    auto a = qf("c3a.alg").algebra;
    oracle::Random rng(12);
    int witnessed = 0;
    for (int t = 0; t < 20; ++t) {
        Matrix g(4, 4);
        // odd forms pair even with odd; super-antisymmetry makes g(j,i) = -g(i,j) there
        for (std::size_t i : {0u, 1u})
            for (std::size_t j : {2u, 3u}) {
                g(i, j) = rng.rational();
                g(j, i) = -g(i, j);
            }
        SuperForm f(a.space(), g, Parity::Odd);
        ASSERT_TRUE(form_issues(f).empty());
        const bool ours = closedness_failures(a, f).empty();
        EXPECT_EQ(ours, oracle::closed(a, g));
        if (!ours) ++witnessed;
    }
    EXPECT_GT(witnessed, 10);
}

TEST(Form, IssuesAreReported) {
    SuperSpace s({"x"}, {"y"});
    Matrix g(2, 2);
    g(0, 1) = 1;
    g(1, 0) = -1;
    auto issues = form_issues(SuperForm(s, g, Parity::Even));
    ASSERT_FALSE(issues.empty());
    EXPECT_EQ(issues.front().kind, FormIssue::Kind::Homogeneity);
    Matrix h(2, 2);
    h(1, 1) = 1;  // odd-odd pairings are symmetric
    EXPECT_TRUE(form_issues(SuperForm(s, h, Parity::Even)).empty());
    Matrix k(2, 2);
    k(0, 0) = 1;  // even-even must be antisymmetric
    EXPECT_FALSE(form_issues(SuperForm(s, k, Parity::Even)).empty());
}

TEST(Orthogonal, Examples) {
    auto a = qf("c3a.alg");
    const auto& s = a.algebra.space();
    EXPECT_EQ(orthogonal(a.form, Subspace::whole(s)), Subspace::zero(s));
    EXPECT_EQ(orthogonal(a.form, Subspace::zero(s)), Subspace::whole(s));
    EXPECT_EQ(orthogonal(a.form, span_of(s, {"e2", "e3"})), span_of(s, {"e2", "e3"}));
    EXPECT_THROW(orthogonal(SuperForm::zero(s, Parity::Even), Subspace::zero(s)), DegenerateFormError);
}

// {x : omega(s, x) = 0}
Subspace right_orthogonal(const SuperForm& f, const Subspace& s) {
    const std::size_t n = f.space().dim();
    Matrix eq(s.dim(), n);
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t j = 0; j < n; ++j) eq(r, j) = f.value(s.vector(r), unit_vector(n, j));
    return Subspace::span(f.space(), nullspace(eq));
}

TEST(Orthogonal, DimensionProperty) {
    oracle::Random rng(31);
    for (const auto& q : corpus_qf()) {
        const auto& s = q.algebra.space();
        for (int t = 0; t < 100; ++t) {
            auto sub = rng.subspace(s, s.dim());
            auto perp = orthogonal(q.form, sub);
            EXPECT_EQ(sub.dim() + perp.dim(), s.dim());
            for (const auto& x : sub.vectors())
                for (const auto& y : perp.vectors()) EXPECT_EQ(q.form.value(y, x), 0);
            EXPECT_EQ(right_orthogonal(q.form, perp), sub);
        }
    }
}

TEST(Orthogonal, InvolutionOnHomogeneousSubspacesProperty) {
    oracle::Random rng(34);
    for (const auto& q : corpus_qf())
        for (int t = 0; t < 100; ++t) {
            auto sub = rng.homogeneous_subspace(q.algebra.space(), q.algebra.dim());
            EXPECT_EQ(orthogonal(q.form, orthogonal(q.form, sub)), sub);
        }
}

TEST(Orthogonal, InvolutionFailsForAnInhomogeneousLine) {
    // even form: odd-odd pairings are symmetric, even-even antisymmetric, so
    // left and right orthogonals of e1 + e3 differ.
    auto a = qf("c3a.alg");
    const auto& s = a.algebra.space();
    auto line = Subspace::span(s, {Vector{Scalar(1), Scalar(0), Scalar(1), Scalar(0)}});
    auto twice = orthogonal(a.form, orthogonal(a.form, line));
    EXPECT_NE(twice, line);
    EXPECT_EQ(twice.dim(), 1u);
    EXPECT_EQ(twice, Subspace::span(s, {Vector{Scalar(1), Scalar(0), Scalar(-1), Scalar(0)}}));
}

TEST(Orthogonal, HomogeneousStaysHomogeneousProperty) {
    oracle::Random rng(32);
    for (const auto& q : corpus_qf())
        for (int t = 0; t < 50; ++t) {
            auto sub = rng.homogeneous_subspace(q.algebra.space(), q.algebra.dim());
            ASSERT_TRUE(sub.is_homogeneous());
            EXPECT_TRUE(orthogonal(q.form, sub).is_homogeneous());
        }
}

TEST(ClassifyIdeal, Examples) {
    auto a = qf("c3a.alg");
    const auto& s = a.algebra.space();
    auto zero = classify_ideal(a, Subspace::zero(s));
    EXPECT_TRUE(zero.isotropic);
    auto lag = classify_ideal(a, span_of(s, {"e2", "e3"}));
    EXPECT_TRUE(lag.lagrangian);
    EXPECT_TRUE(lag.isotropic);
    EXPECT_TRUE(lag.degenerate);
    EXPECT_EQ(lag.labels(), (std::vector<std::string>{"isotropic", "lagrangian", "degenerate"}));
    auto whole = classify_ideal(a, Subspace::whole(s));
    EXPECT_FALSE(whole.degenerate);
    EXPECT_TRUE(whole.nondegenerate);
    EXPECT_THROW(classify_ideal(a, span_of(s, {"e1"})), PreconditionError);
}

TEST(IsotropicIdeals, AreAbelian) {
    auto a = qf("c3a.alg");
    const auto& s = a.algebra.space();
    EXPECT_TRUE(isotropic_ideal_is_abelian_check(a, span_of(s, {"e2", "e3"})));
    EXPECT_TRUE(isotropic_ideal_is_abelian_check(a, Subspace::zero(s)));
    for (const auto& q : corpus_qf()) {
        auto z = center(q.algebra);
        auto j = z.intersect(orthogonal(q.form, z));
        if (j.is_homogeneous()) {
            EXPECT_TRUE(isotropic_ideal_is_abelian_check(q, j));
            EXPECT_TRUE(is_abelian(q.algebra, j));
        }
    }
}

TEST(Reduce, ByZeroIsACopy) {
    auto a = qf("c112a.alg");
    auto r = reduce(a, Subspace::zero(a.algebra.space()));
    EXPECT_EQ(r.reduced.algebra, a.algebra);
    EXPECT_EQ(r.reduced.form, a.form);
}

TEST(Reduce, ByLagrangianIsZero) {
    auto a = qf("c3a.alg");
    auto r = reduce(a, span_of(a.algebra.space(), {"e2", "e3"}));
    EXPECT_EQ(r.reduced.algebra.dim(), 0u);
}

TEST(Reduce, ExtendedModelByDualBlockGivesTheBase) {
    for (const auto& n : {"c3a-amended.ext", "c112a-amended.ext", "2a11.ext"}) {
        auto ext = oracle::corpus_data(n);
        auto m = build(ext);
        auto r = reduce(m.qf, m.dual_block());
        EXPECT_EQ(r.reduced.algebra, ext.input.base.algebra) << n;
        EXPECT_EQ(r.reduced.form, ext.input.base.form) << n;
        EXPECT_TRUE(validate(r.reduced).ok());
    }
}

TEST(Reduce, OutputIsQuasiFrobeniusProperty) {
    oracle::Random rng(33);
    for (const auto& q : corpus_qf()) {
        auto z = center(q.algebra);
        auto zz = z.intersect(orthogonal(q.form, z));
        // Homogeneous subspaces of an isotropic central ideal are isotropic ideals.
        for (int t = 0; t < 10; ++t) {
            std::vector<Vector> pick;
            for (const auto& v : zz.vectors())
                if (rng.coin()) pick.push_back(rng.coin() ? even_part(q.algebra.space(), v) : odd_part(q.algebra.space(), v));
            auto j = Subspace::span(q.algebra.space(), pick);
            if (!j.is_homogeneous() || !is_ideal(q.algebra, j)) continue;
            auto r = reduce(q, j);
            EXPECT_TRUE(validate(r.reduced).ok());
            EXPECT_EQ(r.reduced.form.parity(), q.form.parity());
            EXPECT_EQ(r.reduced.algebra.dim(), q.algebra.dim() - 2 * j.dim());
        }
    }
}

TEST(Reduce, RejectsNonIsotropic) {
    auto a = qf("c3a.alg");
    EXPECT_THROW(reduce(a, Subspace::whole(a.algebra.space())), PreconditionError);
}

TEST(BalancedIdeal, ExtendedModel) {
    auto m = build(oracle::corpus_data("c3a-amended.ext"));
    auto j = balanced_ideal(m.qf);
    EXPECT_TRUE(j.contains(m.dual_block()));
    const auto& s = m.qf.algebra.space();
    EXPECT_EQ(j, span_of(s, {"L1*", "e2", "L2*", "e3"}));
}

TEST(BalancedIdeal, AbelianNondegenerateThrows) {
    SuperSpace s({"x", "y"}, {});
    Matrix g(2, 2);
    g(0, 1) = 1;
    g(1, 0) = -1;
    QuasiFrobenius q{LieSuperAlgebra(s), SuperForm(s, g, Parity::Even)};
    EXPECT_THROW(balanced_ideal(q), TrivialIntersectionError);
}

TEST(BalancedIdeal, CentralIsotropicHomogeneousProperty) {
    for (const auto& q : corpus_qf()) {
        Subspace j;
        try {
            j = balanced_ideal(q);
        } catch (const TrivialIntersectionError&) {
            continue;
        }
        EXPECT_TRUE(center(q.algebra).contains(j));
        EXPECT_TRUE(orthogonal(q.form, j).contains(j));
        EXPECT_TRUE(j.is_homogeneous());
    }
}

}  // namespace
}  // namespace sfx
