#include "perturbation.hpp"

#include <functional>
#include <random>
#include <set>

#include "sfx/superlinalg/linsolve.hpp"

namespace sfx::perturb {

namespace {

enum Block { kXi = 1, kGamma = 2, kEps = 4 };

struct Direction {
    Block block;
    int slot;  // L index for xi and gamma, -1 for eps
    std::function<void(ExtensionInput&, const Scalar&)> apply;
};

std::vector<Direction> directions(const ExtensionData& ext) {
    const auto& as = ext.a->space();
    const auto& l = ext.input.l;
    const std::size_t na = as.dim(), nl = l.dim();
    const int tw = bit(ext.twist);
    std::vector<Direction> out;
    for (std::size_t m = 0; m < nl; ++m)
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j)
                if ((bit(as.parity(i)) + bit(as.parity(j)) + bit(l.parity(m))) % 2 == 0)
                    out.push_back({kXi, static_cast<int>(m), [=](ExtensionInput& in, const Scalar& c) { in.xi[m](i, j) += c; }});
    for (std::size_t m = 0; m < nl; ++m)
        for (std::size_t k = 0; k < nl; ++k)
            for (std::size_t i = 0; i < na; ++i)
                if ((bit(l.parity(k)) + tw + bit(l.parity(m)) + bit(as.parity(i))) % 2 == 0)
                    out.push_back({kGamma, static_cast<int>(m), [=](ExtensionInput& in, const Scalar& c) { in.gamma[m](k, i) += c; }});
    for (std::size_t p = 0; p < nl; ++p)
        for (std::size_t q = p; q < nl; ++q) {
            if (p == q && l.parity(p) == Parity::Even) continue;
            const int s = -koszul(l.parity(p), l.parity(q));
            for (std::size_t k = 0; k < nl; ++k)
                if ((bit(l.parity(k)) + tw + bit(l.parity(p)) + bit(l.parity(q))) % 2 == 0)
                    out.push_back({kEps, -1, [=](ExtensionInput& in, const Scalar& c) {
                                       in.epsilon[(p * nl + q) * nl + k] += c;
                                       if (p != q) in.epsilon[(q * nl + p) * nl + k] += s * c;
                                   }});
        }
    return out;
}

std::vector<Vector> residuals(const ExtensionInput& in) {
    std::vector<Vector> out;
    for (auto& r : check_conditions(make_extension(in)).results) out.push_back(std::move(r.residual));
    return out;
}

struct Sampler {
    std::size_t base;
    std::vector<std::size_t> dirs;  // indices into the base's directions
    std::vector<Vector> kernel;     // over dirs
    std::vector<std::size_t> moving;  // kernel vectors that move the target condition to first order
};

struct BasePoint {
    ExtensionData data;
    std::vector<Direction> dirs;
    std::vector<std::vector<Vector>> linear;  // [direction][condition]
};

BasePoint linearise(const ExtensionData& ext) {
    BasePoint b{ext, directions(ext), {}};
    for (const auto& d : b.dirs) {
        ExtensionInput plus = ext.input, minus = ext.input;
        d.apply(plus, 1);
        d.apply(minus, -1);
        auto rp = residuals(plus), rm = residuals(minus);
        std::vector<Vector> lin;
        // Residuals are at most quadratic, so the central difference is exact.
        for (std::size_t c = 0; c < rp.size(); ++c) lin.push_back(Scalar(1, 2) * (rp[c] - rm[c]));
        b.linear.push_back(std::move(lin));
    }
    return b;
}

Matrix stacked(const BasePoint& b, const std::vector<std::size_t>& dirs, std::size_t skip, bool include_skip) {
    std::vector<Vector> rows;
    const std::size_t nc = b.linear.front().size();
    for (std::size_t c = 0; c < nc; ++c) {
        if (c == skip && !include_skip) continue;
        for (std::size_t x = 0; x < b.linear.front()[c].size(); ++x) {
            Vector row(dirs.size());
            for (std::size_t u = 0; u < dirs.size(); ++u) row[u] = b.linear[dirs[u]][c][x];
            rows.push_back(std::move(row));
        }
    }
    return Matrix::from_rows(rows, dirs.size());
}

std::string key(const ExtensionInput& in) {
    std::string k;
    for (const auto& m : in.xi)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) k += m(i, j).get_str() + ",";
    for (const auto& m : in.gamma)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) k += m(i, j).get_str() + ",";
    for (const auto& x : in.epsilon) k += x.get_str() + ",";
    return k;
}

Matrix stacked_one(const BasePoint& b, const std::vector<std::size_t>& dirs, std::size_t c) {
    std::vector<Vector> rows;
    for (std::size_t x = 0; x < b.linear.front()[c].size(); ++x) {
        Vector row(dirs.size());
        for (std::size_t u = 0; u < dirs.size(); ++u) row[u] = b.linear[dirs[u]][c][x];
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(rows, dirs.size());
}

}  // namespace

ExtensionData zero_data(const ExtensionData& ext) {
    return make_extension(ExtensionInput::zero(ext.input.base, ext.input.l));
}

std::vector<ConditionOutcome> run(const std::vector<ExtensionData>& bases, const Options& opt) {
    std::mt19937 rng(opt.seed);
    auto coefficient = [&] {
        Scalar q(std::uniform_int_distribution<int>(-4, 4)(rng), std::uniform_int_distribution<int>(1, 3)(rng));
        q.canonicalize();
        return q;
    };
    std::vector<BasePoint> points;
    for (const auto& b : bases) points.push_back(linearise(b));

    const auto& names = condition_names();
    std::vector<ConditionOutcome> out;
    for (std::size_t c = 0; c < names.size(); ++c) {
        ConditionOutcome res{names[c]};
        res.base_points = points.size();
        std::vector<Sampler> samplers, quadratic;
        for (std::size_t b = 0; b < points.size(); ++b) {
            std::vector<std::size_t> all(points[b].dirs.size());
            for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
            if (rank(stacked(points[b], all, c, false)) == rank(stacked(points[b], all, c, true))) ++res.implied_at;
            // Whole blocks, their unions, and single-L slices of xi and gamma (a slice
            // often avoids the quadratic cross terms between different L).
            std::vector<std::function<bool(const Direction&)>> masks;
            for (int mask : std::initializer_list<int>{kXi, kGamma, kEps, kXi | kGamma, kXi | kGamma | kEps})
                masks.push_back([mask](const Direction& d) { return (mask & d.block) != 0; });
            for (int m = 0; m < static_cast<int>(points[b].data.dim_l()); ++m)
                for (int mask : std::initializer_list<int>{kXi, kGamma, kXi | kGamma})
                    masks.push_back([mask, m](const Direction& d) { return (mask & d.block) != 0 && d.slot == m; });
            for (const auto& keep : masks) {
                Sampler s{b, {}, {}, {}};
                for (std::size_t k = 0; k < all.size(); ++k)
                    if (keep(points[b].dirs[k])) s.dirs.push_back(k);
                if (s.dirs.empty()) continue;
                s.kernel = nullspace(stacked(points[b], s.dirs, c, false));
                if (s.kernel.empty()) continue;
                const Matrix own = stacked_one(points[b], s.dirs, c);
                for (std::size_t k = 0; k < s.kernel.size(); ++k)
                    if (!is_zero(own.apply(s.kernel[k]))) s.moving.push_back(k);
                (s.moving.empty() ? quadratic : samplers).push_back(std::move(s));
            }
        }
        // Samplers start weighted by whether they move the condition to first order
        // (the others can still hit through quadratic terms) and gain weight per hit.
        for (auto& q : quadratic) samplers.push_back(std::move(q));
        std::vector<double> weight;
        for (const auto& sm : samplers) weight.push_back(sm.moving.empty() ? 1.0 : 3.0);
        std::set<std::string> seen;
        while (!samplers.empty() && res.hits < opt.target && res.attempts < opt.budget) {
            std::discrete_distribution<std::size_t> pick(weight.begin(), weight.end());
            const std::size_t si = pick(rng);
            const Sampler& s = samplers[si];
            const BasePoint& bp = points[s.base];
            ++res.attempts;
            ExtensionInput in = bp.data.input;
            // Sparse combinations hit the quadratic terms far less often than dense ones.
            const int picks = std::uniform_int_distribution<int>(1, 3)(rng);
            for (int p = 0; p < picks; ++p) {
                const std::size_t k = p == 0 && !s.moving.empty() ? s.moving[rng() % s.moving.size()]
                                                                  : rng() % s.kernel.size();
                const Vector& kv = s.kernel[k];
                const Scalar t = coefficient();
                for (std::size_t u = 0; u < s.dirs.size(); ++u)
                    if (kv[u] != 0) bp.dirs[s.dirs[u]].apply(in, t * kv[u]);
            }
            ExtensionData ext = make_extension(std::move(in));
            if (!parity_issues(ext).empty()) continue;
            const auto failed = check_conditions(ext).failed();
            if (failed.size() != 1 || failed.front() != names[c]) continue;
            if (!seen.insert(key(ext.input)).second) continue;
            ++res.hits;
            weight[si] += 20.0;
            const auto v = validate(force_build(ext).qf);
            if (v.algebra.ok() && v.closedness.empty()) ++res.false_passes;
        }
        out.push_back(res);
    }
    return out;
}

}  // namespace sfx::perturb
