#ifndef SFX_TESTS_ORACLE_HPP
#define SFX_TESTS_ORACLE_HPP

// Reference implementations written from the definitions, sharing no code
// paths with the library beyond its data types.

#include <random>

#include "sfx/cohomology.hpp"
#include "sfx/doubleext.hpp"
#include "sfx/io.hpp"
#include "sfx/liesuper.hpp"
#include "sfx/superlinalg.hpp"
#include "sfx/symplectic.hpp"

namespace sfx::oracle {

// Plain Gauss-Jordan on a copy.
std::size_t rank(const Matrix& a);
bool in_column_space(const Matrix& a, const Vector& b);

// Inversion count parity.
int sign(const Permutation& s);
// Odd-odd inversions counted pair by pair.
int odd_inversions(const Permutation& s, const std::vector<Parity>& parities);
// All permutations of 1..n+k filtered for the two increasing blocks.
std::vector<Permutation> shuffles(int n, int k);
long binomial(int n, int k);

// Sign picked up when sorting a tuple into non-decreasing order by adjacent
// swaps, each swap contributing -(-1)^{|x||y|}; 0 when an even index repeats.
int sort_sign(const Tuple& t, const std::vector<Parity>& parities);

// Structural checks restated from the axioms.
bool jacobi_holds(const LieSuperAlgebra& alg);
bool closed(const LieSuperAlgebra& alg, const Matrix& gram);

// beta(a_i, a_j)(L_m) through the extraction-step identity
//   -(-1)^{|L||b|} w(a, xi(L)b) + (-1)^{|a|(|L|+|b|)} w(b, xi(L)a).
Scalar beta(const ExtensionData& ext, std::size_t i, std::size_t j, std::size_t m);
// Right-hand side of the defining identity for w(a_i, alpha(L_p, L_q)).
Scalar alpha_pairing(const ExtensionData& ext, std::size_t i, std::size_t p, std::size_t q);

// Structure constants and Gram matrix of the double extension, assembled
// directly from the defining brackets in the positions used by `layout`.
struct ModelTables {
    std::vector<Scalar> constants;
    Matrix gram;
};
ModelTables model_tables(const ExtensionData& ext, const StandardModel& layout);

// m(alpha ^ beta) as the average over all permutations.
Cochain wedge(const EquivariantPairing& m, const Cochain& a, const Cochain& b);

class Random {
public:
    explicit Random(unsigned seed) : g_(seed) {}
    std::mt19937& engine() { return g_; }
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(g_); }
    // Small numerator and denominator, zero allowed.
    Scalar rational(int num = 4, int den = 3);
    Scalar nonzero_rational(int num = 4, int den = 3);
    Matrix matrix(std::size_t r, std::size_t c, double density = 0.6);
    Vector vector(std::size_t n, double density = 0.6);
    // Super-antisymmetric, parity-consistent cochain.
    Cochain cochain(std::shared_ptr<const LieSuperAlgebra> source, const SuperSpace& coefficients, int degree,
                    Parity parity, double density = 0.5);
    // Random span of up to `max_vectors` vectors (possibly dependent, possibly mixed parity).
    Subspace subspace(const SuperSpace& space, std::size_t max_vectors);
    Subspace homogeneous_subspace(const SuperSpace& space, std::size_t max_vectors);

private:
    std::mt19937 g_;
};

// Corpus access.
AlgebraDocument corpus_algebra(const std::string& name);
ExtensionDocument corpus_extension(const std::string& name);
ExtensionData corpus_data(const std::string& name);
std::vector<std::string> corpus_names(const std::string& suffix);

}  // namespace sfx::oracle

#endif
