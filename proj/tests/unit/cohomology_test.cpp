#include <gtest/gtest.h>

#include "oracle.hpp"

namespace sfx {
namespace {

using AlgPtr = std::shared_ptr<const LieSuperAlgebra>;

AlgPtr corpus_ptr(const std::string& n) {
    return std::make_shared<const LieSuperAlgebra>(oracle::corpus_algebra(n).algebra);
}

std::vector<AlgPtr> corpus_algebras() {
    std::vector<AlgPtr> out;
    for (const auto& n : oracle::corpus_names(".alg")) out.push_back(corpus_ptr(n));
    for (const auto& n : {"c3a-amended.ext", "2a11.ext"})
        out.push_back(std::make_shared<const LieSuperAlgebra>(build(oracle::corpus_data(n)).qf.algebra));
    return out;
}

SuperSpace ground(Parity p = Parity::Even) {
    return p == Parity::Even ? SuperSpace({"1"}, {}) : SuperSpace({}, {"1"});
}

Cochain form_cochain(const AlgPtr& g, const SuperForm& f) {
    return Cochain::from_function(g, ground(), 2, f.parity(), [&](const Tuple& t) { return Vector{f(t[0], t[1])}; });
}

TEST(DCe, AbelianTrivialCoefficientsGiveZero) {
    oracle::Random rng(1);
    auto g = std::make_shared<const LieSuperAlgebra>(SuperSpace({"x", "y"}, {"z"}));
    for (int t = 0; t < 10; ++t) {
        auto f = rng.cochain(g, ground(), 1, Parity::Even);
        EXPECT_TRUE(d_ce(f, Coefficients::Trivial).is_zero());
    }
}

TEST(DCe, SquaresToZeroProperty) {
    oracle::Random rng(2);
    const auto algs = corpus_algebras();
    int count = 0;
    for (int t = 0; t < 200; ++t) {
        const auto& g = algs[t % algs.size()];
        const int degree = t % 3;
        const Parity p = rng.coin() ? Parity::Even : Parity::Odd;
        const bool adjoint = (t / 3) % 2 == 1;
        const SuperSpace coeff = adjoint ? g->space() : ground(rng.coin() ? Parity::Even : Parity::Odd);
        auto f = rng.cochain(g, coeff, degree, p);
        ASSERT_TRUE(cochain_issues(f).empty());
        auto mode = adjoint ? Coefficients::Adjoint : Coefficients::Trivial;
        auto df = d_ce(f, mode);
        EXPECT_TRUE(cochain_issues(df).empty());
        EXPECT_TRUE(d_ce(df, mode).is_zero()) << "cochain " << t;
        ++count;
    }
    EXPECT_EQ(count, 200);
}

TEST(DCe, ClosedFormsAreCocycles) {
    for (const auto& n : oracle::corpus_names(".alg")) {
        auto q = oracle::corpus_algebra(n).quasi_frobenius();
        auto g = std::make_shared<const LieSuperAlgebra>(q.algebra);
        EXPECT_TRUE(d_ce(form_cochain(g, q.form), Coefficients::Trivial).is_zero()) << n;
    }
}

TEST(DCe, CocycleIffClosedOnRandomForms) {
    oracle::Random rng(3);
    auto q = oracle::corpus_algebra("c112a.alg").quasi_frobenius();
    auto g = std::make_shared<const LieSuperAlgebra>(q.algebra);
    for (int t = 0; t < 40; ++t) {
        // perturb the closed form on the even-even and odd-odd blocks
        Matrix m = q.form.gram();
        const std::size_t i = rng.uniform(0, 3), j = rng.uniform(0, 3);
        const Parity pi = g->space().parity(i);
        if (pi != g->space().parity(j) || (i == j && pi == Parity::Even)) continue;
        const Scalar c = rng.rational();
        m(i, j) += c;
        if (i != j) m(j, i) -= koszul(pi, pi) * c;
        SuperForm f(g->space(), m, Parity::Even);
        if (!form_issues(f).empty()) continue;
        const bool cocycle = d_ce(form_cochain(g, f), Coefficients::Trivial).is_zero();
        EXPECT_EQ(cocycle, closedness_failures(q.algebra, f).empty());
        EXPECT_EQ(cocycle, oracle::closed(q.algebra, m));
    }
}

TEST(DCe, DegreeCap) {
    auto g = corpus_ptr("c3a.alg");
    Cochain f(g, ground(), kMaxCochainDegree, Parity::Even);
    EXPECT_THROW(d_ce(f, Coefficients::Trivial), PreconditionError);
}

TEST(DXi, ZeroActionIsBracketInsertionOnly) {
    oracle::Random rng(4);
    auto g = corpus_ptr("c112a.alg");
    SuperSpace v({"v"}, {"w"});
    std::vector<Matrix> zero(g->dim(), Matrix(2, 2));
    for (int t = 0; t < 20; ++t) {
        auto f = rng.cochain(g, v, 1 + t % 2, t % 4 < 2 ? Parity::Even : Parity::Odd);
        EXPECT_EQ(d_xi(f, zero), d_ce(f, Coefficients::Trivial));
    }
}

TEST(DXi, AdjointActionMatchesAdjointDifferential) {
    oracle::Random rng(5);
    auto g = corpus_ptr("2a11.alg");
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < g->dim(); ++i) act.push_back(ad(*g, unit_vector(g->dim(), i)));
    for (int t = 0; t < 20; ++t) {
        auto f = rng.cochain(g, g->space(), t % 3, rng.coin() ? Parity::Even : Parity::Odd);
        EXPECT_EQ(d_xi(f, act), d_ce(f, Coefficients::Adjoint));
    }
}

TEST(DXi, SquareVanishesForHomomorphisms) {
    oracle::Random rng(6);
    auto g = corpus_ptr("c3a.alg");
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < g->dim(); ++i) act.push_back(ad(*g, unit_vector(g->dim(), i)));
    for (int t = 0; t < 20; ++t) {
        auto f = rng.cochain(g, g->space(), t % 3, rng.coin() ? Parity::Even : Parity::Odd);
        EXPECT_TRUE(d_xi(d_xi(f, act), act).is_zero());
    }
}

TEST(DXi, SquareFailsForNonHomomorphism) {
    // On an abelian (2|0) algebra, non-commuting actions are not a representation.
    auto l = std::make_shared<const LieSuperAlgebra>(SuperSpace({"x", "y"}, {}));
    SuperSpace v({"v1", "v2"}, {});
    Matrix a(2, 2), b(2, 2);
    a(0, 1) = 1;
    b(1, 0) = 1;
    ASSERT_FALSE(a * b - b * a == Matrix(2, 2));
    auto f = Cochain::from_function(l, v, 0, Parity::Even, [](const Tuple&) { return Vector{Scalar(1), Scalar(0)}; });
    EXPECT_FALSE(d_xi(d_xi(f, {a, b}), {a, b}).is_zero());
    // Commuting actions are a representation of the abelian algebra.
    EXPECT_TRUE(d_xi(d_xi(f, {a, a}), {a, a}).is_zero());
}

TEST(DXi, AlphaOfAmendedExampleIsClosed) {
    auto ext = oracle::corpus_data("c3a-amended.ext");
    EXPECT_TRUE(d_xi(ext.alpha, ext.input.xi).is_zero());
}

TEST(Wedge, OneCochainsOnEvenArguments) {
    auto g = std::make_shared<const LieSuperAlgebra>(SuperSpace({"x", "y"}, {}));
    SuperSpace k = ground();
    auto a = Cochain::from_function(g, k, 1, Parity::Even, [](const Tuple& t) { return Vector{Scalar(t[0] + 1)}; });
    auto b = Cochain::from_function(g, k, 1, Parity::Even, [](const Tuple& t) { return Vector{Scalar(3 * t[0] + 2)}; });
    EquivariantPairing mult{k, k, k, Parity::Even, {Scalar(1)}};
    auto w = wedge(mult, a, b);
    // a(x)b(y) - a(y)b(x) = 1*5 - 2*2
    EXPECT_EQ(w.value({0, 1}), Vector{Scalar(1)});
    EXPECT_EQ(w.value({1, 0}), Vector{Scalar(-1)});
    EXPECT_EQ(w.value({0, 0}), Vector{Scalar(0)});
}

TEST(Wedge, MatchesPermutationAverageOracle) {
    oracle::Random rng(7);
    for (const auto& n : oracle::corpus_names(".alg")) {
        const auto g = corpus_ptr(n);
        const SuperSpace& s = g->space();
        auto comm = supercommutator_pairing(s);
        auto end = hom_space(s, s).space;
        for (int t = 0; t < 4; ++t) {
            const int n = 1 + t % 2, k = 1;
            auto a = rng.cochain(g, end, n, rng.coin() ? Parity::Even : Parity::Odd, 0.3);
            auto b = rng.cochain(g, end, k, rng.coin() ? Parity::Even : Parity::Odd, 0.3);
            auto w = wedge(comm, a, b);
            EXPECT_EQ(w, oracle::wedge(comm, a, b));
            EXPECT_TRUE(cochain_issues(w).empty());
        }
    }
}

TEST(Wedge, BilinearAndZero) {
    oracle::Random rng(8);
    auto g = corpus_ptr("c112a.alg");
    const SuperSpace& s = g->space();
    auto hs = hom_space(s, ground());
    auto ev = ev_pairing(s, ground());
    auto f1 = rng.cochain(g, hs.space, 1, Parity::Even), f2 = rng.cochain(g, hs.space, 1, Parity::Even);
    auto x = rng.cochain(g, s, 1, Parity::Even);
    const Scalar c = rng.nonzero_rational();
    EXPECT_EQ(wedge(ev, f1 + c * f2, x), wedge(ev, f1, x) + c * wedge(ev, f2, x));
    Cochain zero(g, hs.space, 1, Parity::Even);
    EXPECT_TRUE(wedge(ev, zero, x).is_zero());
}

TEST(Ev, EvaluatesCoordinatewise) {
    oracle::Random rng(9);
    SuperSpace a({"a1", "a2"}, {"a3"}), h({"h1"}, {"h2"});
    auto hs = hom_space(a, h);
    auto ev = ev_pairing(a, h);
    for (int t = 0; t < 20; ++t) {
        Matrix m = rng.matrix(2, 3);
        Vector x = rng.vector(3);
        EXPECT_EQ(ev.apply(hs.from_matrix(m), x), m.apply(x));
        EXPECT_EQ(hs.to_matrix(hs.from_matrix(m)), m);
    }
}

TEST(Ev, GammaWedgeAlphaVanishesOnAmendedExample) {
    auto ext = oracle::corpus_data("c3a-amended.ext");
    EXPECT_TRUE(wedge(ev_pairing(ext.a->space(), ext.l_dual), ext.gamma, ext.alpha).is_zero());
}

TEST(Ev, GammaWedgeTauEvaluatesOnPairs) {
    auto ext = oracle::corpus_data("c3a-amended.ext");
    Matrix t(4, 2);
    t(1, 0) = 1;  // e2 (x) L1*
    auto tau = Cochain::from_function(ext.l, ext.a->space(), 1, Parity::Even,
                                      [&](const Tuple& x) { return t.column(x[0]); });
    auto w = wedge(ev_pairing(ext.a->space(), ext.l_dual), ext.gamma, tau);
    EXPECT_EQ(w.degree(), 2);
    EXPECT_EQ(w, oracle::wedge(ev_pairing(ext.a->space(), ext.l_dual), ext.gamma, tau));
}

TEST(Cochain, InvariantViolationsAreReported) {
    auto g = corpus_ptr("c3a.alg");
    Cochain f(g, ground(), 2, Parity::Even);
    f.set({0, 1}, {Scalar(1)});  // missing the antisymmetric partner
    bool anti = false;
    for (const auto& i : cochain_issues(f)) anti |= i.kind == CochainIssue::Kind::Antisymmetry;
    EXPECT_TRUE(anti);
    Cochain p(g, ground(), 1, Parity::Even);
    p.set({2}, {Scalar(1)});  // odd slot into an even coefficient
    bool par = false;
    for (const auto& i : cochain_issues(p)) par |= i.kind == CochainIssue::Kind::Parity;
    EXPECT_TRUE(par);
}

TEST(Cochain, RepeatedOddSlotsMayBeNonzero) {
    auto g = corpus_ptr("c3a.alg");
    Cochain f(g, ground(), 2, Parity::Even);
    f.set({3, 3}, {Scalar(1)});
    EXPECT_TRUE(cochain_issues(f).empty());
}

}  // namespace
}  // namespace sfx
