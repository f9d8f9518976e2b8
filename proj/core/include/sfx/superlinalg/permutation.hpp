#ifndef SFX_SUPERLINALG_PERMUTATION_HPP
#define SFX_SUPERLINALG_PERMUTATION_HPP

#include <vector>

#include "sfx/superlinalg/parity.hpp"

namespace sfx {

// One-line notation over 1-based slots: images[i-1] = sigma(i).
struct Permutation {
    std::vector<int> images;

    int degree() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images.at(i - 1); }
    friend bool operator==(const Permutation&, const Permutation&) = default;
};

Permutation identity_permutation(int n);
bool is_permutation(const Permutation& s);
Permutation compose(const Permutation& outer, const Permutation& inner);  // outer o inner
std::vector<Permutation> all_permutations(int n);

// Permutations of {1..n+k} increasing on slots 1..n and on slots n+1..n+k.
std::vector<Permutation> shuffles(int n, int k);

int signature(const Permutation& s);

// K(sigma, X): pairs i<j with x_{sigma(i)}, x_{sigma(j)} odd and sigma(i) > sigma(j).
int odd_inversions(const Permutation& s, const std::vector<Parity>& parities);

// theta(sigma, X) = sgn(sigma) (-1)^{K(sigma, X)}, as +1 or -1.
int theta_sign(const Permutation& s, const std::vector<Parity>& parities);

}  // namespace sfx

#endif
