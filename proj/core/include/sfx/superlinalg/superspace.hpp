#ifndef SFX_SUPERLINALG_SUPERSPACE_HPP
#define SFX_SUPERLINALG_SUPERSPACE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfx/superlinalg/parity.hpp"

namespace sfx {

struct BasisVector {
    std::string label;
    Parity parity = Parity::Even;
};

/*
 * Finite-dimensional Z2-graded space with a named basis.
 * Basis order is canonical: every even vector precedes every odd vector.
 */
class SuperSpace {
public:
    SuperSpace() = default;
    SuperSpace(std::vector<std::string> even, std::vector<std::string> odd);

    std::size_t dim() const { return basis_.size(); }
    std::size_t even_dim() const { return n_even_; }
    std::size_t odd_dim() const { return basis_.size() - n_even_; }

    const std::string& label(std::size_t i) const { return basis_.at(i).label; }
    Parity parity(std::size_t i) const { return basis_.at(i).parity; }
    const std::vector<BasisVector>& basis() const { return basis_; }

    std::optional<std::size_t> find(std::string_view label) const;
    // Throws std::out_of_range naming the label.
    std::size_t index_of(std::string_view label) const;

    std::vector<std::string> labels() const;
    std::vector<Parity> parities() const;

    friend bool operator==(const SuperSpace& a, const SuperSpace& b);

private:
    std::vector<BasisVector> basis_;
    std::size_t n_even_ = 0;
};

// Result of bringing an arbitrary declaration order into canonical order.
struct CanonicalSpace {
    SuperSpace space;
    std::vector<std::size_t> order;  // order[new] = old position
    bool reordered = false;
};

// Stable sort: evens keep relative order, then odds. Throws on duplicate labels.
CanonicalSpace canonicalize(const std::vector<BasisVector>& declared);

// pi(x) <-> x; Pi(Pi(V)) is identified with V.
std::string pi_label(const std::string& label);

SuperSpace parity_swap(const SuperSpace& space);

}  // namespace sfx

#endif
