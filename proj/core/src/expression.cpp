#include "sfx/io/expression.hpp"

#include <cctype>

#include "sfx/errors.hpp"

namespace sfx {

namespace {

enum class Tok { Number, Ident, Star, Plus, Minus, LParen, RParen, Tensor, Wedge, End };

struct Token {
    Tok kind;
    std::string text;  // digits "p/q" for numbers, name for identifiers
    std::size_t column;
};

bool starts_with(std::string_view s, std::size_t at, std::string_view p) { return s.substr(at, p.size()) == p; }

// Subscript digits U+2080..U+2089 are E2 82 80..89.
int subscript_digit(std::string_view s, std::size_t at) {
    if (at + 2 < s.size() && static_cast<unsigned char>(s[at]) == 0xE2 && static_cast<unsigned char>(s[at + 1]) == 0x82) {
        const unsigned char c = static_cast<unsigned char>(s[at + 2]);
        if (c >= 0x80 && c <= 0x89) return c - 0x80;
    }
    return -1;
}

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0, col = 1;
    auto ident_char = [&](std::size_t at) {
        return at < s.size() && (std::isalnum(static_cast<unsigned char>(s[at])) || s[at] == '_');
    };
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        const std::size_t start = col;
        if (std::isspace(c)) {
            ++i, ++col;
        } else if (std::isdigit(c)) {
            std::string num;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++], ++col;
            if (i + 1 < s.size() && s[i] == '/' && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
                num += s[i++], ++col;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++], ++col;
            }
            out.push_back({Tok::Number, num, start});
        } else if (starts_with(s, i, "½")) {
            out.push_back({Tok::Number, "1/2", start});
            i += 2, ++col;
        } else if (std::isalpha(c) || c == '_' || starts_with(s, i, "π")) {
            std::string name;
            if (starts_with(s, i, "π")) {
                name = "pi";
                i += 2, ++col;
            }
            while (true) {
                if (ident_char(i)) {
                    name += s[i++], ++col;
                } else if (int d = subscript_digit(s, i); d >= 0) {
                    name += static_cast<char>('0' + d);
                    i += 3, ++col;
                } else {
                    break;
                }
            }
            out.push_back({Tok::Ident, name, start});
        } else if (starts_with(s, i, "(x)")) {
            out.push_back({Tok::Tensor, "", start});
            i += 3, col += 3;
        } else if (starts_with(s, i, "/\\")) {
            out.push_back({Tok::Wedge, "", start});
            i += 2, col += 2;
        } else if (starts_with(s, i, "⊗")) {
            out.push_back({Tok::Tensor, "", start});
            i += 3, ++col;
        } else if (starts_with(s, i, "∧")) {
            out.push_back({Tok::Wedge, "", start});
            i += 3, ++col;
        } else if (starts_with(s, i, "−")) {
            out.push_back({Tok::Minus, "", start});
            i += 3, ++col;
        } else {
            Tok k;
            switch (c) {
                case '*': k = Tok::Star; break;
                case '+': k = Tok::Plus; break;
                case '-': k = Tok::Minus; break;
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                default: {
                    std::size_t len = c < 0x80 ? 1 : c < 0xE0 ? 2 : c < 0xF0 ? 3 : 4;
                    throw ParseError("unexpected character '" + std::string(s.substr(i, len)) + "' at column " +
                                         std::to_string(col),
                                     0, col);
                }
            }
            out.push_back({k, "", start});
            ++i, ++col;
        }
    }
    out.push_back({Tok::End, "", col});
    return out;
}

using Terms = std::vector<Monomial>;

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

    Expression run() {
        if (peek().kind == Tok::End) fail("empty expression");
        Terms terms = expr();
        if (peek().kind != Tok::End) fail("unexpected token");
        return {std::move(terms)};
    }

private:
    const Token& peek() const { return t_[pos_]; }
    const Token& next() { return t_[pos_++]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at column " + std::to_string(peek().column), 0, peek().column);
    }
    Scalar number() {
        const Token& t = next();
        try {
            return parse_scalar(t.text);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string(e.what()) + " at column " + std::to_string(t.column), 0, t.column);
        }
    }
    void expect(Tok k, const char* what) {
        if (peek().kind != k) fail(std::string("expected ") + what);
        ++pos_;
    }

    Terms expr() {
        Terms out;
        Scalar sign = 1;
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) sign = next().kind == Tok::Minus ? -1 : 1;
        while (true) {
            for (auto& m : term()) {
                m.coefficient *= sign;
                out.push_back(std::move(m));
            }
            if (peek().kind != Tok::Plus && peek().kind != Tok::Minus) break;
            sign = next().kind == Tok::Minus ? -1 : 1;
        }
        return out;
    }

    Terms term() {
        Scalar c = 1;
        if (peek().kind == Tok::Number) {
            c = number();
            const Tok k = peek().kind;
            if (k != Tok::Ident && k != Tok::LParen) return {Monomial{c, nullptr}};
        }
        Terms p = product();
        for (auto& m : p) m.coefficient *= c;
        return p;
    }

    Terms product() {
        Terms acc = factor();
        while (peek().kind == Tok::Tensor || peek().kind == Tok::Wedge) {
            const TensorOp op = next().kind == Tok::Tensor ? TensorOp::Tensor : TensorOp::Wedge;
            Terms rhs = factor();
            Terms out;
            for (const auto& a : acc)
                for (const auto& b : rhs) {
                    if (!a.tree || !b.tree) fail("a scalar cannot be a tensor factor");
                    auto n = std::make_shared<ExprNode>();
                    n->op = op;
                    n->left = a.tree;
                    n->right = b.tree;
                    out.push_back({a.coefficient * b.coefficient, n});
                }
            acc = std::move(out);
        }
        return acc;
    }

    Terms factor() {
        if (peek().kind == Tok::LParen) {
            ++pos_;
            Terms inner = expr();
            expect(Tok::RParen, "')'");
            return inner;
        }
        if (peek().kind == Tok::Number) {
            Scalar c = number();
            Terms f = factor();
            for (auto& m : f) m.coefficient *= c;
            return f;
        }
        auto n = std::make_shared<ExprNode>();
        n->atom = atom();
        return {Monomial{1, n}};
    }

    std::string atom() {
        if (peek().kind != Tok::Ident) fail("expected a label");
        std::string name = next().text;
        if ((name == "pi" || name == "ad") && peek().kind == Tok::LParen) {
            ++pos_;
            if (peek().kind != Tok::Ident) fail("expected a label");
            std::string inner = next().text;
            if (peek().kind == Tok::Star) inner += "*", ++pos_;
            expect(Tok::RParen, "')'");
            name += "(" + inner + ")";
        }
        while (peek().kind == Tok::Star) name += "*", ++pos_;
        return name;
    }

    std::vector<Token> t_;
    std::size_t pos_ = 0;
};

void walk(const ExprPtr& n, FlatMonomial& out) {
    if (n->is_atom()) {
        out.atoms.push_back(n->atom);
        return;
    }
    walk(n->left, out);
    out.ops.push_back(n->op);
    walk(n->right, out);
}

}  // namespace

Expression parse_expression(std::string_view text) { return Parser(tokenize(text)).run(); }

FlatMonomial flatten(const ExprPtr& tree) {
    FlatMonomial out;
    if (tree) walk(tree, out);
    return out;
}

std::string to_string(TensorOp op) { return op == TensorOp::Tensor ? "⊗" : "∧"; }

}  // namespace sfx
