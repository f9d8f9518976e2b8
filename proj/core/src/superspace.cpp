#include "sfx/superlinalg/superspace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sfx {

SuperSpace::SuperSpace(std::vector<std::string> even, std::vector<std::string> odd) {
    n_even_ = even.size();
    basis_.reserve(even.size() + odd.size());
    for (auto& l : even) basis_.push_back({std::move(l), Parity::Even});
    for (auto& l : odd) basis_.push_back({std::move(l), Parity::Odd});
    std::set<std::string> seen;
    for (const auto& b : basis_) {
        if (b.label.empty()) throw std::invalid_argument("empty basis label");
        if (!seen.insert(b.label).second) throw std::invalid_argument("duplicate basis label '" + b.label + "'");
    }
}

std::optional<std::size_t> SuperSpace::find(std::string_view label) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].label == label) return i;
    return std::nullopt;
}

std::size_t SuperSpace::index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw std::out_of_range("unknown basis label '" + std::string(label) + "'");
}

std::vector<std::string> SuperSpace::labels() const {
    std::vector<std::string> out;
    for (const auto& b : basis_) out.push_back(b.label);
    return out;
}

std::vector<Parity> SuperSpace::parities() const {
    std::vector<Parity> out;
    for (const auto& b : basis_) out.push_back(b.parity);
    return out;
}

bool operator==(const SuperSpace& a, const SuperSpace& b) {
    if (a.basis_.size() != b.basis_.size()) return false;
    for (std::size_t i = 0; i < a.basis_.size(); ++i)
        if (a.basis_[i].label != b.basis_[i].label || a.basis_[i].parity != b.basis_[i].parity) return false;
    return true;
}

CanonicalSpace canonicalize(const std::vector<BasisVector>& declared) {
    CanonicalSpace out;
    std::vector<std::string> even, odd;
    std::vector<std::size_t> even_pos, odd_pos;
    for (std::size_t i = 0; i < declared.size(); ++i) {
        if (declared[i].parity == Parity::Even) {
            even.push_back(declared[i].label);
            even_pos.push_back(i);
        } else {
            odd.push_back(declared[i].label);
            odd_pos.push_back(i);
        }
    }
    out.order = even_pos;
    out.order.insert(out.order.end(), odd_pos.begin(), odd_pos.end());
    for (std::size_t i = 0; i < out.order.size(); ++i)
        if (out.order[i] != i) out.reordered = true;
    out.space = SuperSpace(std::move(even), std::move(odd));
    return out;
}

std::string pi_label(const std::string& label) {
    if (label.size() > 4 && label.rfind("pi(", 0) == 0 && label.back() == ')') {
        // Only strip when the wrapper encloses the whole label.
        int depth = 0;
        bool whole = true;
        for (std::size_t i = 2; i < label.size(); ++i) {
            if (label[i] == '(') ++depth;
            if (label[i] == ')' && --depth == 0 && i + 1 != label.size()) whole = false;
        }
        if (whole) return label.substr(3, label.size() - 4);
    }
    return "pi(" + label + ")";
}

SuperSpace parity_swap(const SuperSpace& space) {
    std::vector<std::string> even, odd;
    for (const auto& b : space.basis()) (b.parity == Parity::Odd ? even : odd).push_back(pi_label(b.label));
    return SuperSpace(std::move(even), std::move(odd));
}

}  // namespace sfx
