#include <gtest/gtest.h>

#include "oracle.hpp"

namespace sfx {
namespace {

Matrix random_gram(oracle::Random& rng, const SuperSpace& s, Parity p) {
    const std::size_t n = s.dim();
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if ((s.parity(i) + s.parity(j)) != p) continue;
            const bool both_odd = s.parity(i) == Parity::Odd && s.parity(j) == Parity::Odd;
            if (i == j && !both_odd) continue;
            g(i, j) = rng.rational();
            g(j, i) = both_odd ? g(i, j) : -g(i, j);
        }
    return g;
}

SuperSpace random_space(oracle::Random& rng, const std::string& prefix, std::size_t max_even, std::size_t max_odd) {
    std::vector<std::string> ev, od;
    const int ne = rng.uniform(0, static_cast<int>(max_even)), no = rng.uniform(0, static_cast<int>(max_odd));
    for (int i = 0; i < ne + no; ++i) (i < ne ? ev : od).push_back(prefix + std::to_string(i + 1));
    return SuperSpace(ev, od);
}

TEST(Expression, TermsAndOperators) {
    auto e = parse_expression("2 e1⊗e2* - e3(x)e4* + 1/2 L1*/\\L2*");
    ASSERT_EQ(e.terms.size(), 3u);
    EXPECT_EQ(e.terms[0].coefficient, 2);
    EXPECT_EQ(e.terms[1].coefficient, -1);
    EXPECT_EQ(e.terms[2].coefficient, Scalar(1, 2));
    auto f0 = flatten(e.terms[0].tree);
    EXPECT_EQ(f0.atoms, (std::vector<std::string>{"e1", "e2*"}));
    EXPECT_EQ(f0.ops, std::vector<TensorOp>{TensorOp::Tensor});
    EXPECT_EQ(flatten(e.terms[1].tree).ops, std::vector<TensorOp>{TensorOp::Tensor});
    auto f2 = flatten(e.terms[2].tree);
    EXPECT_EQ(f2.atoms, (std::vector<std::string>{"L1*", "L2*"}));
    EXPECT_EQ(f2.ops, std::vector<TensorOp>{TensorOp::Wedge});
}

TEST(Expression, AlternativeSpellings) {
    auto a = parse_expression("−½ π(L₁*)");
    ASSERT_EQ(a.terms.size(), 1u);
    EXPECT_EQ(a.terms[0].coefficient, Scalar(-1, 2));
    EXPECT_EQ(flatten(a.terms[0].tree).atoms, std::vector<std::string>{"pi(L1*)"});
    auto b = parse_expression("3(e1 + 2 e2)⊗e3*");
    ASSERT_EQ(b.terms.size(), 2u);
    EXPECT_EQ(b.terms[0].coefficient, 3);
    EXPECT_EQ(b.terms[1].coefficient, 6);
    EXPECT_EQ(flatten(b.terms[1].tree).atoms, (std::vector<std::string>{"e2", "e3*"}));
    auto c = parse_expression("ad(e1) + 5");
    ASSERT_EQ(c.terms.size(), 2u);
    EXPECT_EQ(flatten(c.terms[0].tree).atoms, std::vector<std::string>{"ad(e1)"});
    EXPECT_EQ(c.terms[1].tree, nullptr);
}

TEST(Expression, ErrorsCarryAColumn) {
    try {
        parse_expression("e1 ⊗ ⊗ e2");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column(), 6u);
    }
    try {
        parse_expression("e1 + (e2");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_GT(e.column(), 0u);
    }
    EXPECT_THROW(parse_expression(""), ParseError);
    EXPECT_THROW(parse_expression("1/0 e1"), ParseError);
}

TEST(Notation, VectorsAndUnknownLabels) {
    SuperSpace s({"e1", "e2"}, {"e3"});
    EXPECT_EQ(parse_vector(s, "e1 - 2 e3"), (Vector{Scalar(1), Scalar(0), Scalar(-2)}));
    EXPECT_EQ(parse_vector(s, "e2 + e2"), (Vector{Scalar(0), Scalar(2), Scalar(0)}));
    EXPECT_THROW(parse_vector(s, "e9"), ParseError);
    EXPECT_THROW(parse_vector(s, "e1⊗e2*"), PreconditionError);
}

TEST(Notation, DualTensorSign) {
    SuperSpace s({"x"}, {"u", "v"});
    Matrix g = parse_two_form(s, "u*⊗v*");
    // <u*⊗v*, u⊗v> = (-1)^{|u||v|} = -1
    EXPECT_EQ(g(1, 2), -1);
    EXPECT_EQ(g(2, 1), 0);
    Matrix w = parse_two_form(s, "u*∧v*");
    EXPECT_EQ(w(1, 2), -1);
    EXPECT_EQ(w(2, 1), -1);
}

TEST(Notation, EndomorphismReading) {
    auto alg = oracle::corpus_algebra("c3a.alg").algebra;
    Matrix m = parse_endomorphism(alg, "e2⊗e1*");
    EXPECT_EQ(m(1, 0), 1);
    EXPECT_EQ(m.apply(unit_vector(4, 0)), unit_vector(4, 1));
    Matrix ad4 = parse_endomorphism(alg, "ad(e4)");
    EXPECT_EQ(ad4.apply(unit_vector(4, 3)), unit_vector(4, 1));
}

TEST(Notation, GammaReading) {
    SuperSpace a({"e1"}, {"e2"});
    SuperSpace l({"L1"}, {"L2"});
    auto g = parse_gamma(a, l, "L1*⊗e2*⊗L2*");
    // gamma(L2)(e2) = -(-1)^{|e2|} L1* = L1*
    EXPECT_EQ(g[1](0, 1), 1);
    auto h = parse_gamma(a, l, "L2*⊗e1*⊗L2*");
    EXPECT_EQ(h[1](1, 0), -1);
}

TEST(Notation, FormatParseRoundTripProperty) {
    oracle::Random rng(51);
    for (int t = 0; t < 100; ++t) {
        auto a = random_space(rng, "e", 3, 3);
        auto l = random_space(rng, "L", 2, 2);
        if (a.dim() == 0 || l.dim() == 0) continue;
        for (Parity p : {Parity::Even, Parity::Odd}) {
            Matrix g = random_gram(rng, a, p);
            EXPECT_EQ(parse_two_form(a, format_two_form(a, g)), g);
        }
        LieSuperAlgebra ab(a);
        Matrix m = rng.matrix(a.dim(), a.dim());
        EXPECT_EQ(parse_endomorphism(ab, format_endomorphism(a, m)), m);
        std::vector<Matrix> gamma;
        for (std::size_t k = 0; k < l.dim(); ++k) gamma.push_back(rng.matrix(l.dim(), a.dim()));
        EXPECT_EQ(parse_gamma(a, l, format_gamma(a, l, gamma)), gamma);
        Matrix tau = rng.matrix(a.dim(), l.dim());
        EXPECT_EQ(parse_linear_map(l, a, format_linear_map(l, a, tau)), tau);
        auto src = std::make_shared<const LieSuperAlgebra>(l);
        auto c = rng.cochain(src, a, 2, rng.coin() ? Parity::Even : Parity::Odd);
        std::vector<Scalar> flat;
        for (std::size_t i = 0; i < l.dim(); ++i)
            for (std::size_t j = 0; j < l.dim(); ++j)
                for (const auto& x : c.value({i, j})) flat.push_back(x);
        EXPECT_EQ(parse_two_cochain(l, a, format_two_cochain(l, a, flat)), flat);
        EXPECT_EQ(parse_two_cochain(l, a, format_two_cochain(l, a, flat, TensorOp::Wedge)), flat);
    }
}

TEST(Document, CorpusAlgebrasRoundTrip) {
    for (const auto& n : oracle::corpus_names(".alg")) {
        auto doc = oracle::corpus_algebra(n);
        auto again = read_algebra_document(write_algebra_document(doc));
        EXPECT_EQ(again.algebra, doc.algebra) << n;
        EXPECT_EQ(again.form, doc.form) << n;
        EXPECT_EQ(again.name, doc.name) << n;
    }
}

TEST(Document, CorpusExtensionsRoundTrip) {
    auto load = make_loader(".");
    for (const auto& n : oracle::corpus_names(".ext")) {
        auto doc = oracle::corpus_extension(n);
        auto ext = make_extension(doc.input);
        auto again = read_extension_document(write_extension_document(ext, doc.name, doc.base_ref, doc.reference), load);
        EXPECT_EQ(again.input.xi, doc.input.xi) << n;
        EXPECT_EQ(again.input.gamma, doc.input.gamma) << n;
        EXPECT_EQ(again.input.epsilon, doc.input.epsilon) << n;
        EXPECT_EQ(again.input.l, doc.input.l) << n;
        EXPECT_EQ(again.model, doc.model) << n;
        EXPECT_EQ(again.reference.brackets, doc.reference.brackets) << n;
        EXPECT_EQ(again.reference.beta, doc.reference.beta) << n;
    }
}

TEST(Document, BuiltModelsRoundTrip) {
    for (const auto& n : {"c3a-amended.ext", "c112a-amended.ext", "2a11.ext"}) {
        auto m = build(oracle::corpus_data(n));
        auto doc = read_algebra_document(write_algebra_document(m.qf.algebra, m.qf.form, "model"));
        EXPECT_EQ(doc.algebra, m.qf.algebra) << n;
        EXPECT_EQ(doc.form, m.qf.form) << n;
        EXPECT_FALSE(doc.canon.reordered);
    }
}

TEST(Document, RandomDocumentsRoundTripProperty) {
    oracle::Random rng(52);
    auto load = make_loader(".");
    const std::vector<std::string> bases{"c3a.alg", "c112a.alg", "2a11.alg"};
    for (int t = 0; t < 100; ++t) {
        auto s = random_space(rng, "x", 3, 3);
        const Parity p = rng.coin() ? Parity::Even : Parity::Odd;
        SuperForm f(s, random_gram(rng, s, p), p);
        LieSuperAlgebra ab(s);
        auto doc = read_algebra_document(write_algebra_document(ab, f, "random"));
        EXPECT_EQ(doc.algebra, ab);
        EXPECT_EQ(doc.form, f);

        const auto& bname = bases[t % bases.size()];
        auto base = oracle::corpus_algebra(bname).quasi_frobenius();
        auto l = random_space(rng, "L", 2, 2);
        if (l.dim() == 0) continue;
        ExtensionInput in = ExtensionInput::zero(base, l);
        for (auto& m : in.xi) m = rng.matrix(base.algebra.dim(), base.algebra.dim(), 0.3);
        for (auto& m : in.gamma) m = rng.matrix(l.dim(), base.algebra.dim(), 0.3);
        for (auto& x : in.epsilon) x = rng.coin(0.3) ? rng.rational() : Scalar(0);
        auto ext = make_extension(in);
        auto again = read_extension_document(write_extension_document(ext, "random", bname), load);
        EXPECT_EQ(again.input.xi, in.xi);
        EXPECT_EQ(again.input.gamma, in.gamma);
        EXPECT_EQ(again.input.l, in.l);
    }
}

TEST(Document, DeclarationOrderIsCanonicalizedAndReported) {
    auto doc = read_algebra_document(R"({"format": "sfx-algebra", "version": 1,
      "basis": [{"label": "u", "parity": "odd"}, {"label": "x", "parity": "even"}, {"label": "v", "parity": "odd"}],
      "brackets": [["u", "v", "x"]]})");
    EXPECT_TRUE(doc.canon.reordered);
    EXPECT_EQ(doc.algebra.space().labels(), (std::vector<std::string>{"x", "u", "v"}));
    EXPECT_EQ(doc.canon.order, (std::vector<std::size_t>{1, 0, 2}));
    EXPECT_EQ(doc.algebra.bracket_basis(1, 2), unit_vector(3, 0));
    EXPECT_EQ(doc.algebra.bracket_basis(2, 1), unit_vector(3, 0));
    EXPECT_FALSE(doc.form.has_value());
    EXPECT_THROW(doc.quasi_frobenius(), PreconditionError);
}

TEST(Document, Errors) {
    try {
        read_algebra_document("{\n  \"format\": \"sfx-algebra\",\n  \"basis\": [,]\n}");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_GT(e.column(), 0u);
    }
    EXPECT_THROW(read_algebra_document(""), ParseError);
    EXPECT_THROW(read_algebra_document(R"({"format": "sfx-algebra", "version": 1,
      "basis": [{"label": "x", "parity": "even"}, {"label": "y", "parity": "even"}],
      "brackets": [["x", "y", "x"], ["y", "x", "y"]]})"),
                 ValidationError);
    EXPECT_THROW(read_algebra_document(R"({"format": "sfx-algebra", "version": 1,
      "basis": [{"label": "x", "parity": "even"}], "brackets": [["x", "q", "x"]]})"),
                 ParseError);
    EXPECT_THROW(read_algebra_document(R"({"format": "sfx-algebra", "version": 9, "basis": []})"), ParseError);
    EXPECT_THROW(read_extension_document(R"({"format": "sfx-extension", "version": 1, "base": "missing.alg",
      "l": [], "xi": {}, "gamma": "0", "epsilon": "0"})",
                                         make_loader(".")),
                 ParseError);
}

TEST(Document, KindAndCorpus) {
    EXPECT_EQ(document_kind(find_corpus("c3a.alg")->text), DocumentKind::Algebra);
    EXPECT_EQ(document_kind(find_corpus("c3a.ext")->text), DocumentKind::Extension);
    EXPECT_THROW(document_kind("{}"), ParseError);
    const auto& c = corpus();
    ASSERT_EQ(c.size(), 8u);
    for (std::size_t i = 1; i < c.size(); ++i) EXPECT_LT(c[i - 1].name, c[i].name);
    EXPECT_EQ(find_corpus("nope"), nullptr);
    EXPECT_EQ(make_loader(".")("c112a.alg"), std::string(find_corpus("c112a.alg")->text));
    EXPECT_THROW(make_loader(".")("nope.alg"), ParseError);
}

TEST(Document, ReferenceLinesResolveAgainstTheModel) {
    auto doc = oracle::corpus_extension("c3a-amended.ext");
    auto m = build(make_extension(doc.input));
    auto lines = reference_lines(doc.reference, m.qf.algebra.space());
    ASSERT_EQ(lines.size(), 8u);
    const auto& s = m.qf.algebra.space();
    EXPECT_EQ(lines[0].left, s.index_of("e1"));
    EXPECT_EQ(lines[0].right, s.index_of("e4"));
    Vector v(s.dim());
    v[s.index_of("e3")] = 1;
    v[s.index_of("L2*")] = 2;
    EXPECT_EQ(lines[0].value, v);
}

}  // namespace
}  // namespace sfx
