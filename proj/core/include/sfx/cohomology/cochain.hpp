#ifndef SFX_COHOMOLOGY_COCHAIN_HPP
#define SFX_COHOMOLOGY_COCHAIN_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "sfx/liesuper.hpp"

namespace sfx {

inline constexpr int kMaxCochainDegree = 4;

using Tuple = std::vector<std::size_t>;

/*
 * n-linear map on the source algebra with values in a graded coefficient
 * space, stored densely over every basis tuple.
 */
class Cochain {
public:
    Cochain() = default;
    Cochain(std::shared_ptr<const LieSuperAlgebra> source, SuperSpace coefficients, int degree, Parity parity);

    static Cochain from_function(std::shared_ptr<const LieSuperAlgebra> source, SuperSpace coefficients, int degree,
                                 Parity parity, const std::function<Vector(const Tuple&)>& f);

    const LieSuperAlgebra& source() const { return *source_; }
    const std::shared_ptr<const LieSuperAlgebra>& source_ptr() const { return source_; }
    const SuperSpace& coefficients() const { return coeff_; }
    int degree() const { return degree_; }
    Parity parity() const { return parity_; }

    std::size_t tuple_count() const { return tuples_; }
    Tuple decode(std::size_t flat) const;
    std::size_t encode(const Tuple& t) const;

    Vector value(const Tuple& t) const;
    const Scalar& at(const Tuple& t, std::size_t k) const { return data_[encode(t) * coeff_.dim() + k]; }
    void set(const Tuple& t, const Vector& v);
    void add(const Tuple& t, const Vector& v);

    // Multilinear extension to arbitrary argument vectors.
    Vector evaluate(const std::vector<Vector>& args) const;

    bool is_zero() const;

    friend Cochain operator+(const Cochain& a, const Cochain& b);
    friend Cochain operator-(const Cochain& a, const Cochain& b);
    friend Cochain operator*(const Scalar& s, const Cochain& a);
    friend bool operator==(const Cochain& a, const Cochain& b);

private:
    void check_compatible(const Cochain& o) const;

    std::shared_ptr<const LieSuperAlgebra> source_;
    SuperSpace coeff_;
    int degree_ = 0;
    Parity parity_ = Parity::Even;
    std::size_t tuples_ = 1;
    std::vector<Scalar> data_;
};

struct CochainIssue {
    enum class Kind { Antisymmetry, Parity };
    Kind kind;
    Tuple tuple;
    std::size_t slot_or_coefficient;
};

/*
 * Swapping adjacent slots multiplies the value by -(-1)^{|x_a||x_a+1|};
 * values at a tuple lie in coefficients of parity |phi| + sum of slot parities.
 */
std::vector<CochainIssue> cochain_issues(const Cochain& phi);

// Apply a linear map to every value; the result has parity |phi| + map_parity.
Cochain postcompose(const Cochain& phi, const Matrix& map, const SuperSpace& target, Parity map_parity);

// Hom(source, target) as a graded space: basis t_k (x) s_i*, parity |t_k| + |s_i|.
struct HomSpace {
    SuperSpace space;
    SuperSpace source;
    SuperSpace target;
    std::vector<std::size_t> position;  // position[k * source.dim() + i]

    std::size_t index(std::size_t target_k, std::size_t source_i) const {
        return position[target_k * source.dim() + source_i];
    }
    Matrix to_matrix(const Vector& f) const;
    Vector from_matrix(const Matrix& m) const;
};

HomSpace hom_space(const SuperSpace& source, const SuperSpace& target);

}  // namespace sfx

#endif
