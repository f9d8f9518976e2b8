#include "sfx/cohomology/cochain.hpp"

#include <stdexcept>

#include "sfx/errors.hpp"

namespace sfx {

Cochain::Cochain(std::shared_ptr<const LieSuperAlgebra> source, SuperSpace coefficients, int degree, Parity parity)
    : source_(std::move(source)), coeff_(std::move(coefficients)), degree_(degree), parity_(parity) {
    if (!source_) throw std::invalid_argument("cochain without a source algebra");
    if (degree_ < 0 || degree_ > kMaxCochainDegree)
        throw PreconditionError("cochain degree " + std::to_string(degree_) + " is not supported");
    tuples_ = 1;
    for (int i = 0; i < degree_; ++i) tuples_ *= source_->dim();
    data_.resize(tuples_ * coeff_.dim());
}

Cochain Cochain::from_function(std::shared_ptr<const LieSuperAlgebra> source, SuperSpace coefficients, int degree,
                               Parity parity, const std::function<Vector(const Tuple&)>& f) {
    Cochain c(std::move(source), std::move(coefficients), degree, parity);
    for (std::size_t t = 0; t < c.tuples_; ++t) c.set(c.decode(t), f(c.decode(t)));
    return c;
}

Tuple Cochain::decode(std::size_t flat) const {
    Tuple t(static_cast<std::size_t>(degree_));
    const std::size_t n = source_->dim();
    for (int s = degree_; s-- > 0;) {
        t[static_cast<std::size_t>(s)] = flat % n;
        flat /= n;
    }
    return t;
}

std::size_t Cochain::encode(const Tuple& t) const {
    if (t.size() != static_cast<std::size_t>(degree_)) throw std::invalid_argument("cochain arity mismatch");
    std::size_t flat = 0;
    for (auto i : t) {
        if (i >= source_->dim()) throw std::out_of_range("cochain argument index");
        flat = flat * source_->dim() + i;
    }
    return flat;
}

Vector Cochain::value(const Tuple& t) const {
    const std::size_t m = coeff_.dim(), base = encode(t) * m;
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(base),
                  data_.begin() + static_cast<std::ptrdiff_t>(base + m));
}

void Cochain::set(const Tuple& t, const Vector& v) {
    if (v.size() != coeff_.dim()) throw std::invalid_argument("cochain value has the wrong length");
    const std::size_t base = encode(t) * coeff_.dim();
    for (std::size_t k = 0; k < v.size(); ++k) data_[base + k] = v[k];
}

void Cochain::add(const Tuple& t, const Vector& v) {
    if (v.size() != coeff_.dim()) throw std::invalid_argument("cochain value has the wrong length");
    const std::size_t base = encode(t) * coeff_.dim();
    for (std::size_t k = 0; k < v.size(); ++k)
        if (sgn(v[k]) != 0) data_[base + k] += v[k];
}

Vector Cochain::evaluate(const std::vector<Vector>& args) const {
    if (args.size() != static_cast<std::size_t>(degree_)) throw std::invalid_argument("cochain arity mismatch");
    Vector out(coeff_.dim());
    for (std::size_t f = 0; f < tuples_; ++f) {
        Tuple t = decode(f);
        Scalar w = 1;
        for (std::size_t s = 0; s < t.size() && sgn(w) != 0; ++s) w *= args[s].at(t[s]);
        if (sgn(w) == 0) continue;
        axpy(out, w, value(t));
    }
    return out;
}

bool Cochain::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

void Cochain::check_compatible(const Cochain& o) const {
    if (degree_ != o.degree_ || !(coeff_ == o.coeff_) || !(source_->space() == o.source_->space()))
        throw std::invalid_argument("incompatible cochains");
}

Cochain operator+(const Cochain& a, const Cochain& b) {
    a.check_compatible(b);
    Cochain r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
}

Cochain operator-(const Cochain& a, const Cochain& b) {
    a.check_compatible(b);
    Cochain r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
}

Cochain operator*(const Scalar& s, const Cochain& a) {
    Cochain r = a;
    for (auto& x : r.data_) x *= s;
    return r;
}

bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && a.coeff_ == b.coeff_ && a.source_->space() == b.source_->space() &&
           a.data_ == b.data_;
}

std::vector<CochainIssue> cochain_issues(const Cochain& phi) {
    std::vector<CochainIssue> out;
    const auto& src = phi.source().space();
    const auto& cf = phi.coefficients();
    for (std::size_t f = 0; f < phi.tuple_count(); ++f) {
        Tuple t = phi.decode(f);
        Vector v = phi.value(t);
        Parity expected = phi.parity();
        for (auto i : t) expected += src.parity(i);
        for (std::size_t k = 0; k < cf.dim(); ++k)
            if (sgn(v[k]) != 0 && cf.parity(k) != expected) {
                out.push_back({CochainIssue::Kind::Parity, t, k});
                break;
            }
        for (std::size_t s = 0; s + 1 < t.size(); ++s) {
            Tuple u = t;
            std::swap(u[s], u[s + 1]);
            Vector w = phi.value(u);
            Scalar sign = -koszul(src.parity(t[s]), src.parity(t[s + 1]));
            if (w != sign * v) out.push_back({CochainIssue::Kind::Antisymmetry, t, s});
        }
    }
    return out;
}

Cochain postcompose(const Cochain& phi, const Matrix& map, const SuperSpace& target, Parity map_parity) {
    if (map.cols() != phi.coefficients().dim() || map.rows() != target.dim())
        throw std::invalid_argument("postcompose: map shape mismatch");
    Cochain out(phi.source_ptr(), target, phi.degree(), phi.parity() + map_parity);
    for (std::size_t f = 0; f < phi.tuple_count(); ++f) {
        Tuple t = phi.decode(f);
        out.set(t, map.apply(phi.value(t)));
    }
    return out;
}

Matrix HomSpace::to_matrix(const Vector& f) const {
    Matrix m(target.dim(), source.dim());
    for (std::size_t k = 0; k < target.dim(); ++k)
        for (std::size_t i = 0; i < source.dim(); ++i) m(k, i) = f.at(index(k, i));
    return m;
}

Vector HomSpace::from_matrix(const Matrix& m) const {
    Vector f(space.dim());
    for (std::size_t k = 0; k < target.dim(); ++k)
        for (std::size_t i = 0; i < source.dim(); ++i) f[index(k, i)] = m(k, i);
    return f;
}

HomSpace hom_space(const SuperSpace& source, const SuperSpace& target) {
    HomSpace h;
    h.source = source;
    h.target = target;
    std::vector<BasisVector> decl;
    for (std::size_t k = 0; k < target.dim(); ++k)
        for (std::size_t i = 0; i < source.dim(); ++i)
            decl.push_back({target.label(k) + "⊗" + source.label(i) + "*", target.parity(k) + source.parity(i)});
    CanonicalSpace cs = canonicalize(decl);
    h.space = cs.space;
    h.position.resize(decl.size());
    for (std::size_t p = 0; p < cs.order.size(); ++p) h.position[cs.order[p]] = p;
    return h;
}

}  // namespace sfx
