#include "sfx/superlinalg/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sfx {

Permutation identity_permutation(int n) {
    Permutation p;
    p.images.resize(static_cast<std::size_t>(n));
    std::iota(p.images.begin(), p.images.end(), 1);
    return p;
}

bool is_permutation(const Permutation& s) {
    std::vector<bool> seen(s.images.size() + 1, false);
    for (int x : s.images) {
        if (x < 1 || x > s.degree() || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.degree() != inner.degree()) throw std::invalid_argument("permutation degree mismatch");
    Permutation p;
    for (int i = 1; i <= inner.degree(); ++i) p.images.push_back(outer(inner(i)));
    return p;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Permutation p = identity_permutation(n);
    do out.push_back(p);
    while (std::next_permutation(p.images.begin(), p.images.end()));
    return out;
}

std::vector<Permutation> shuffles(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("negative shuffle block");
    std::vector<Permutation> out;
    // Choose the image set of the first block; both blocks are then increasing.
    std::vector<bool> first(static_cast<std::size_t>(n + k), false);
    std::fill(first.begin(), first.begin() + n, true);
    do {
        Permutation p;
        for (int i = 0; i < n + k; ++i)
            if (first[static_cast<std::size_t>(i)]) p.images.push_back(i + 1);
        for (int i = 0; i < n + k; ++i)
            if (!first[static_cast<std::size_t>(i)]) p.images.push_back(i + 1);
        out.push_back(std::move(p));
    } while (std::prev_permutation(first.begin(), first.end()));
    return out;
}

int signature(const Permutation& s) {
    int inversions = 0;
    for (int i = 0; i < s.degree(); ++i)
        for (int j = i + 1; j < s.degree(); ++j)
            if (s.images[static_cast<std::size_t>(i)] > s.images[static_cast<std::size_t>(j)]) ++inversions;
    return minus_one_pow(inversions);
}

int odd_inversions(const Permutation& s, const std::vector<Parity>& parities) {
    if (parities.size() != s.images.size()) throw std::invalid_argument("parity list length differs from degree");
    int k = 0;
    for (int i = 1; i <= s.degree(); ++i)
        for (int j = i + 1; j <= s.degree(); ++j) {
            int a = s(i), b = s(j);
            if (a > b && parities[static_cast<std::size_t>(a - 1)] == Parity::Odd &&
                parities[static_cast<std::size_t>(b - 1)] == Parity::Odd)
                ++k;
        }
    return k;
}

int theta_sign(const Permutation& s, const std::vector<Parity>& parities) {
    return signature(s) * minus_one_pow(odd_inversions(s, parities));
}

}  // namespace sfx
