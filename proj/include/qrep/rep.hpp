#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrep/constructions.hpp"
#include "qrep/detail/square_system.hpp"
#include "qrep/error.hpp"
#include "qrep/linalg.hpp"
#include "qrep/matrix.hpp"
#include "qrep/quiver.hpp"

namespace qrep {

/// Representation of a quiver: a vector space F^dims[v] at every vertex and a
/// dims[t] x dims[s] matrix on every arrow s -> t.
template <class F>
class Rep {
public:
    using field_type = F;

    Rep(Quiver quiver, F field, std::vector<std::size_t> dims, std::vector<Matrix<F>> maps)
        : quiver_(std::move(quiver)), field_(std::move(field)), dims_(std::move(dims)), maps_(std::move(maps)) {
        if (dims_.size() != quiver_.vertex_count())
            throw error(errc::shape_mismatch, "expected " + std::to_string(quiver_.vertex_count()) + " dimensions");
        if (maps_.size() != quiver_.arrow_count())
            throw error(errc::shape_mismatch, "expected " + std::to_string(quiver_.arrow_count()) + " arrow maps");
        for (std::size_t a = 0; a < maps_.size(); ++a) {
            const auto& m = maps_[a];
            if (!(m.field() == field_)) throw error(errc::field_mismatch, "arrow '" + quiver_.arrows()[a].id + "'");
            if (m.rows() != dims_[quiver_.target(a)] || m.cols() != dims_[quiver_.source(a)])
                throw error(errc::shape_mismatch, "arrow '" + quiver_.arrows()[a].id + "' carries a " + m.shape() +
                                                      " matrix, expected " +
                                                      std::to_string(dims_[quiver_.target(a)]) + "x" +
                                                      std::to_string(dims_[quiver_.source(a)]));
        }
    }

    static Rep zero(const Quiver& quiver, const F& field) {
        return with_zero_maps(quiver, field, std::vector<std::size_t>(quiver.vertex_count(), 0));
    }

    static Rep with_zero_maps(const Quiver& quiver, const F& field, std::vector<std::size_t> dims) {
        std::vector<Matrix<F>> maps;
        for (std::size_t a = 0; a < quiver.arrow_count(); ++a)
            maps.emplace_back(field, dims.at(quiver.target(a)), dims.at(quiver.source(a)));
        return Rep(quiver, field, std::move(dims), std::move(maps));
    }

    const Quiver& quiver() const { return quiver_; }
    const F& field() const { return field_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(std::size_t vertex) const { return dims_.at(vertex); }
    const std::vector<Matrix<F>>& maps() const { return maps_; }
    const Matrix<F>& map(std::size_t arrow) const { return maps_.at(arrow); }

    std::size_t total_dim() const {
        std::size_t n = 0;
        for (auto d : dims_) n += d;
        return n;
    }
    bool is_zero() const { return total_dim() == 0; }

    bool operator==(const Rep& o) const {
        return quiver_ == o.quiver_ && field_ == o.field_ && dims_ == o.dims_ && maps_ == o.maps_;
    }

private:
    Quiver quiver_;
    F field_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix<F>> maps_;
};

namespace detail {

template <class F>
void require_compatible(const Rep<F>& a, const Rep<F>& b) {
    if (!(a.quiver() == b.quiver())) throw error(errc::quiver_mismatch, "representations of different quivers");
    if (!(a.field() == b.field())) throw error(errc::field_mismatch, "representations over different fields");
}

template <class F>
std::string describe_deviation(const Matrix<F>& lhs, const Matrix<F>& rhs) {
    for (std::size_t r = 0; r < lhs.rows(); ++r)
        for (std::size_t c = 0; c < lhs.cols(); ++c)
            if (lhs(r, c) != rhs(r, c))
                return "entry (" + std::to_string(r) + "," + std::to_string(c) + "): " +
                       lhs.field().to_string(lhs(r, c)) + " != " + lhs.field().to_string(rhs(r, c));
    return "no deviation";
}

/// First failed condition for comps : source -> target, if any.
template <class F>
std::optional<error> rep_morphism_violation(const Rep<F>& source, const Rep<F>& target,
                                            const std::vector<Matrix<F>>& comps) {
    if (!(source.quiver() == target.quiver()))
        return error(errc::quiver_mismatch, "source and target live on different quivers");
    if (!(source.field() == target.field())) return error(errc::field_mismatch, "source and target fields differ");
    const Quiver& q = source.quiver();
    if (comps.size() != q.vertex_count())
        return error(errc::shape_mismatch, "expected " + std::to_string(q.vertex_count()) + " vertex maps");
    for (std::size_t v = 0; v < comps.size(); ++v)
        if (comps[v].rows() != target.dim(v) || comps[v].cols() != source.dim(v) ||
            !(comps[v].field() == source.field()))
            return error(errc::shape_mismatch, "vertex '" + q.vertices()[v] + "' carries a " + comps[v].shape() +
                                                   " matrix, expected " + std::to_string(target.dim(v)) + "x" +
                                                   std::to_string(source.dim(v)));
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        auto lhs = comps[q.target(a)] * source.map(a);
        auto rhs = target.map(a) * comps[q.source(a)];
        if (!(lhs == rhs))
            return error(errc::non_commuting_square,
                         "arrow '" + q.arrows()[a].id + "', " + describe_deviation(lhs, rhs));
    }
    return std::nullopt;
}

} // namespace detail

/// A morphism of representations; construction checks every arrow square.
template <class F>
class RepMorphism {
public:
    RepMorphism(Rep<F> source, Rep<F> target, std::vector<Matrix<F>> comps)
        : source_(std::move(source)), target_(std::move(target)), comps_(std::move(comps)) {
        if (auto e = detail::rep_morphism_violation(source_, target_, comps_)) throw *e;
    }

    static RepMorphism from_flat(Rep<F> source, Rep<F> target, std::vector<Matrix<F>> comps) {
        return RepMorphism(std::move(source), std::move(target), std::move(comps));
    }

    static RepMorphism identity(const Rep<F>& x) {
        std::vector<Matrix<F>> comps;
        for (auto d : x.dims()) comps.push_back(Matrix<F>::identity(x.field(), d));
        return RepMorphism(x, x, std::move(comps));
    }

    static RepMorphism zero(const Rep<F>& source, const Rep<F>& target) {
        detail::require_compatible(source, target);
        std::vector<Matrix<F>> comps;
        for (std::size_t v = 0; v < source.dims().size(); ++v)
            comps.emplace_back(source.field(), target.dim(v), source.dim(v));
        return RepMorphism(source, target, std::move(comps));
    }

    const Rep<F>& source() const { return source_; }
    const Rep<F>& target() const { return target_; }
    const std::vector<Matrix<F>>& comps() const { return comps_; }
    const Matrix<F>& at(std::size_t vertex) const { return comps_.at(vertex); }
    const std::vector<Matrix<F>>& flat() const { return comps_; }

    bool is_zero() const {
        for (const auto& m : comps_)
            if (!m.is_zero()) return false;
        return true;
    }

    bool operator==(const RepMorphism& o) const {
        return comps_ == o.comps_ && source_ == o.source_ && target_ == o.target_;
    }

private:
    Rep<F> source_;
    Rep<F> target_;
    std::vector<Matrix<F>> comps_;
};

template <class F>
RepMorphism<F> morphism_check(const Rep<F>& source, const Rep<F>& target, std::vector<Matrix<F>> comps) {
    return RepMorphism<F>(source, target, std::move(comps));
}

template <class F>
bool is_morphism(const Rep<F>& source, const Rep<F>& target, const std::vector<Matrix<F>>& comps) {
    return !detail::rep_morphism_violation(source, target, comps).has_value();
}

/// g after f.
template <class F>
RepMorphism<F> compose(const RepMorphism<F>& g, const RepMorphism<F>& f) {
    if (!(f.target() == g.source())) throw error(errc::endpoint_mismatch, "compose: target of f is not source of g");
    std::vector<Matrix<F>> comps;
    for (std::size_t v = 0; v < f.comps().size(); ++v) comps.push_back(g.at(v) * f.at(v));
    return RepMorphism<F>(f.source(), g.target(), std::move(comps));
}

template <class F>
RepMorphism<F> add(const RepMorphism<F>& f, const RepMorphism<F>& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
        throw error(errc::endpoint_mismatch, "add: morphisms with different endpoints");
    std::vector<Matrix<F>> comps;
    for (std::size_t v = 0; v < f.comps().size(); ++v) comps.push_back(f.at(v) + g.at(v));
    return RepMorphism<F>(f.source(), f.target(), std::move(comps));
}

template <class F>
RepMorphism<F> scale(const typename F::value_type& lambda, const RepMorphism<F>& f) {
    std::vector<Matrix<F>> comps;
    for (const auto& m : f.comps()) comps.push_back(m.scaled(lambda));
    return RepMorphism<F>(f.source(), f.target(), std::move(comps));
}

template <class F>
RepMorphism<F> subtract(const RepMorphism<F>& f, const RepMorphism<F>& g) {
    return add(f, scale(f.source().field().neg(f.source().field().one()), g));
}

/// Unknown layout and coefficient matrix of the Hom system: one block per
/// vertex (dims_b[v] x dims_a[v]), one group of equations per arrow.
template <class F>
struct HomSystem {
    Matrix<F> coefficients;
    std::vector<detail::Block> blocks;
};

template <class F>
HomSystem<F> hom_system(const Rep<F>& a, const Rep<F>& b) {
    detail::require_compatible(a, b);
    const Quiver& q = a.quiver();
    detail::SquareSystem<F> sys(a.field());
    std::vector<detail::Block> blocks;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) blocks.push_back(sys.add_block(b.dim(v), a.dim(v)));
    for (std::size_t x = 0; x < q.arrow_count(); ++x)
        sys.add_square(blocks[q.target(x)], a.map(x), b.map(x), blocks[q.source(x)]);
    return {sys.coefficients(), std::move(blocks)};
}

/// Basis of Hom(a, b): the nullspace of the flattened commuting-square system.
template <class F>
std::vector<RepMorphism<F>> hom_basis(const Rep<F>& a, const Rep<F>& b) {
    auto sys = hom_system(a, b);
    auto sol = nullspace_basis(sys.coefficients);
    std::vector<RepMorphism<F>> basis;
    for (std::size_t j = 0; j < sol.cols(); ++j) {
        std::vector<Matrix<F>> comps;
        for (const auto& blk : sys.blocks) comps.push_back(detail::SquareSystem<F>::extract(sol, j, blk));
        basis.emplace_back(a, b, std::move(comps));
    }
    return basis;
}

namespace detail {

template <class F>
std::array<Matrix<F>, 4> biproduct_blocks(const F& k, std::size_t m, std::size_t n) {
    Matrix<F> i1(k, m + n, m), i2(k, m + n, n), p1(k, m, m + n), p2(k, n, m + n);
    for (std::size_t i = 0; i < m; ++i) i1(i, i) = p1(i, i) = k.one();
    for (std::size_t i = 0; i < n; ++i) i2(m + i, i) = p2(i, m + i) = k.one();
    return {i1, i2, p1, p2};
}

} // namespace detail

template <class F>
DirectSum<Rep<F>, RepMorphism<F>> direct_sum(const Rep<F>& a, const Rep<F>& b) {
    detail::require_compatible(a, b);
    const Quiver& q = a.quiver();
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) dims.push_back(a.dim(v) + b.dim(v));
    std::vector<Matrix<F>> maps;
    for (std::size_t x = 0; x < q.arrow_count(); ++x) maps.push_back(block_diag(a.map(x), b.map(x)));
    Rep<F> sum(q, a.field(), dims, std::move(maps));

    std::array<std::vector<Matrix<F>>, 4> parts;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        auto blk = detail::biproduct_blocks(a.field(), a.dim(v), b.dim(v));
        for (std::size_t i = 0; i < 4; ++i) parts[i].push_back(std::move(blk[i]));
    }
    return {sum,
            {RepMorphism<F>(a, sum, std::move(parts[0])), RepMorphism<F>(b, sum, std::move(parts[1]))},
            {RepMorphism<F>(sum, a, std::move(parts[2])), RepMorphism<F>(sum, b, std::move(parts[3]))}};
}

/// Vertex-wise nullspaces with the restricted arrow maps.
template <class F>
Kernel<Rep<F>, RepMorphism<F>> kernel(const RepMorphism<F>& f) {
    const Rep<F>& src = f.source();
    const Quiver& q = src.quiver();
    std::vector<Matrix<F>> incl;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        incl.push_back(nullspace_basis(f.at(v)));
        dims.push_back(incl.back().cols());
    }
    std::vector<Matrix<F>> maps;
    for (std::size_t x = 0; x < q.arrow_count(); ++x)
        maps.push_back(solve_through(incl[q.target(x)], src.map(x) * incl[q.source(x)]));
    Rep<F> object(q, src.field(), std::move(dims), std::move(maps));
    RepMorphism<F> inclusion(object, src, std::move(incl));
    return {std::move(object), std::move(inclusion)};
}

/// Vertex-wise quotients by the image with the induced arrow maps.
template <class F>
Cokernel<Rep<F>, RepMorphism<F>> cokernel(const RepMorphism<F>& f) {
    const Rep<F>& tgt = f.target();
    const Quiver& q = tgt.quiver();
    std::vector<Matrix<F>> image, proj, sect;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        image.push_back(colspace_basis(f.at(v)));
        auto quo = quotient_projection(image.back(), tgt.dim(v));
        dims.push_back(quo.projection.rows());
        proj.push_back(std::move(quo.projection));
        sect.push_back(std::move(quo.section));
    }
    std::vector<Matrix<F>> maps;
    for (std::size_t x = 0; x < q.arrow_count(); ++x) {
        auto pushed = proj[q.target(x)] * tgt.map(x);
        if (!(pushed * image[q.source(x)]).is_zero())
            throw std::logic_error("induced cokernel map depends on the chosen section");
        maps.push_back(pushed * sect[q.source(x)]);
    }
    Rep<F> object(q, tgt.field(), std::move(dims), std::move(maps));
    RepMorphism<F> projection(tgt, object, std::move(proj));
    return {std::move(object), std::move(projection)};
}

template <class F>
CanonicalDecomposition<Rep<F>, RepMorphism<F>> canonical_decomposition(const RepMorphism<F>& f) {
    return detail::canonical_decomposition_impl(f);
}

} // namespace qrep
