#ifndef SFX_IO_NOTATION_HPP
#define SFX_IO_NOTATION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "sfx/liesuper/algebra.hpp"
#include "sfx/io/expression.hpp"
#include "sfx/symplectic/form.hpp"

namespace sfx {

/*
 * Readings of tensor notation. For duals,
 *   <X*⊗Y*, u⊗v> = (-1)^{|u||Y|} <X*,u><Y*,v>
 *   X*∧Y* = X*⊗Y* - (-1)^{|X||Y|} Y*⊗X*
 * "V⊗(X*∧Y*)" and "V∧(X*∧Y*)" both denote the map (u,v) -> (X*∧Y*)(u,v) V.
 * Every interpreter throws ParseError for syntax and unknown labels, and
 * PreconditionError for terms of the wrong shape.
 */

Vector parse_vector(const SuperSpace& space, std::string_view text);

// Gram matrix of a 2-form written with wedges (or plain tensors) of duals.
Matrix parse_two_form(const SuperSpace& space, std::string_view text);
std::string format_two_form(const SuperSpace& space, const Matrix& gram);

// "c e_i⊗e_j*" sends e_j to c e_i; "ad(x)" is the adjoint map.
Matrix parse_endomorphism(const LieSuperAlgebra& a, std::string_view text);
std::string format_endomorphism(const SuperSpace& a, const Matrix& m);

/*
 * gamma as a sum of "c Z⊗a*⊗L*" with Z in l*, read as gamma(L)(a) += -(-1)^{|a|} c Z.
 * Returns one dim l x dim a matrix per L (column i is gamma(L)(a_i)).
 */
std::vector<Matrix> parse_gamma(const SuperSpace& a, const SuperSpace& l, std::string_view text);
std::string format_gamma(const SuperSpace& a, const SuperSpace& l, const std::vector<Matrix>& gamma);

/*
 * Bilinear map source x source -> values as "c V⊗(X*∧Y*)".
 * Flat layout (i * n + j) * values.dim() + k.
 */
std::vector<Scalar> parse_two_cochain(const SuperSpace& source, const SuperSpace& values, std::string_view text);
std::string format_two_cochain(const SuperSpace& source, const SuperSpace& values, const std::vector<Scalar>& flat,
                               TensorOp outer = TensorOp::Tensor);

// tau : l -> a written as "c e_i⊗L_m*"; dim a x dim l.
Matrix parse_linear_map(const SuperSpace& source, const SuperSpace& target, std::string_view text);
std::string format_linear_map(const SuperSpace& source, const SuperSpace& target, const Matrix& m);

}  // namespace sfx

#endif
