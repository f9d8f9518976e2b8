#ifndef SFX_IO_EXPRESSION_HPP
#define SFX_IO_EXPRESSION_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sfx/superlinalg/scalar.hpp"

namespace sfx {

/*
 * Tensor-notation expressions:
 *   expr    := ['+'|'-'] term (('+'|'-') term)*
 *   term    := [rational] product | rational
 *   product := factor (('⊗' | '(x)' | '∧' | '/\') factor)*
 *   factor  := atom | [rational] '(' expr ')'
 *   atom    := ident ['*'] | 'pi(' ident ['*'] ')' ['*'] | 'ad(' ident ')'
 * Rationals are "n", "p/q" or "½"; "−" is accepted for '-', subscript digits for digits, "π" for "pi".
 * Products distribute over sums; operators associate to the left.
 */
enum class TensorOp { Tensor, Wedge };

struct ExprNode {
    // Atom when children are empty.
    std::string atom;
    TensorOp op = TensorOp::Tensor;
    std::shared_ptr<const ExprNode> left, right;
    bool is_atom() const { return !left; }
};

using ExprPtr = std::shared_ptr<const ExprNode>;

struct Monomial {
    Scalar coefficient;
    ExprPtr tree;  // null for a bare scalar
};

struct Expression {
    std::vector<Monomial> terms;
};

// Throws ParseError with the 1-based column (in code points) of the offending token.
Expression parse_expression(std::string_view text);

// Atoms in left-to-right order with the operators between them.
struct FlatMonomial {
    std::vector<std::string> atoms;
    std::vector<TensorOp> ops;
};

FlatMonomial flatten(const ExprPtr& tree);

std::string to_string(TensorOp op);

}  // namespace sfx

#endif
