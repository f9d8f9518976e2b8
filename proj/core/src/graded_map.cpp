#include "sfx/superlinalg/graded_map.hpp"

#include <stdexcept>

namespace sfx {

GradedLinearMap::GradedLinearMap(SuperSpace source, SuperSpace target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), m_(std::move(matrix)) {
    if (m_.rows() != target_.dim() || m_.cols() != source_.dim())
        throw std::invalid_argument("graded map matrix has the wrong shape");
}

GradedLinearMap GradedLinearMap::identity(const SuperSpace& space) {
    return GradedLinearMap(space, space, Matrix::identity(space.dim()));
}

GradedLinearMap GradedLinearMap::zero(const SuperSpace& source, const SuperSpace& target) {
    return GradedLinearMap(source, target, Matrix(target.dim(), source.dim()));
}

GradedLinearMap GradedLinearMap::even_part() const {
    Matrix m(m_.rows(), m_.cols());
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j < m_.cols(); ++j)
            if (target_.parity(i) == source_.parity(j)) m(i, j) = m_(i, j);
    return GradedLinearMap(source_, target_, std::move(m));
}

GradedLinearMap GradedLinearMap::odd_part() const {
    Matrix m(m_.rows(), m_.cols());
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j < m_.cols(); ++j)
            if (target_.parity(i) != source_.parity(j)) m(i, j) = m_(i, j);
    return GradedLinearMap(source_, target_, std::move(m));
}

std::optional<Parity> GradedLinearMap::parity() const {
    if (odd_part().matrix().is_zero()) return Parity::Even;
    if (even_part().matrix().is_zero()) return Parity::Odd;
    return std::nullopt;
}

GradedLinearMap GradedLinearMap::compose(const GradedLinearMap& inner) const {
    if (!(inner.target_ == source_)) throw std::invalid_argument("composition of incompatible maps");
    return GradedLinearMap(inner.source_, target_, m_ * inner.m_);
}

}  // namespace sfx
