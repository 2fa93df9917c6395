#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrep/constructions.hpp"
#include "qrep/detail/square_system.hpp"
#include "qrep/error.hpp"
#include "qrep/linalg.hpp"
#include "qrep/quiver.hpp"
#include "qrep/rep.hpp"

namespace qrep {

/// Addresses one connector: `level` l joins component l to component l + 1
/// (0-based), for the arrow pair (prev_arrow of quiver l, next_arrow of
/// quiver l + 1).
struct ConnectorKey {
    std::size_t level = 0;
    std::size_t prev_arrow = 0;
    std::size_t next_arrow = 0;

    auto operator<=>(const ConnectorKey&) const = default;
};

/// An n-representation: representations V_1..V_n of quivers Q_1..Q_n plus, at
/// every level l and every arrow pair (a, b) of Q_l x Q_{l+1}, a connector
/// matrix V_l[t(a)] -> V_{l+1}[s(b)]. All connectors are stored, zeros
/// included.
template <class F>
class NRep {
public:
    using field_type = F;

    /// connectors[l] lists the level-l matrices in arrow_pairs order.
    NRep(std::vector<Rep<F>> components, std::vector<std::vector<Matrix<F>>> connectors)
        : components_(std::move(components)), connectors_(std::move(connectors)) {
        if (components_.empty()) throw error(errc::index_out_of_range, "an n-representation needs n >= 1");
        const F& k = components_.front().field();
        for (const auto& c : components_)
            if (!(c.field() == k)) throw error(errc::field_mismatch, "components over different fields");
        if (connectors_.size() != components_.size() - 1)
            throw error(errc::shape_mismatch, "expected " + std::to_string(components_.size() - 1) +
                                                  " connector levels");
        for (std::size_t l = 0; l < connectors_.size(); ++l) {
            const Quiver& qa = components_[l].quiver();
            const Quiver& qb = components_[l + 1].quiver();
            if (connectors_[l].size() != qa.arrow_count() * qb.arrow_count())
                throw error(errc::shape_mismatch, "level " + std::to_string(l + 2) + " needs " +
                                                      std::to_string(qa.arrow_count() * qb.arrow_count()) +
                                                      " connectors");
            for (auto [a, b] : arrow_pairs(qa, qb)) {
                const auto& m = connectors_[l][a * qb.arrow_count() + b];
                std::size_t rows = components_[l + 1].dim(qb.source(b));
                std::size_t cols = components_[l].dim(qa.target(a));
                if (!(m.field() == k))
                    throw error(errc::field_mismatch, "connector at level " + std::to_string(l + 2));
                if (m.rows() != rows || m.cols() != cols)
                    throw error(errc::shape_mismatch,
                                "connector at level " + std::to_string(l + 2) + " for pair (" + qa.arrows()[a].id +
                                    ", " + qb.arrows()[b].id + ") is " + m.shape() + ", expected " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
            }
        }
    }

    /// Zero n-representation on the given quivers.
    static NRep zero(const std::vector<Quiver>& quivers, const F& field) {
        std::vector<Rep<F>> comps;
        for (const auto& q : quivers) comps.push_back(Rep<F>::zero(q, field));
        return with_zero_connectors(std::move(comps));
    }

    static NRep with_zero_connectors(std::vector<Rep<F>> comps) {
        std::vector<std::vector<Matrix<F>>> conn;
        for (std::size_t l = 0; l + 1 < comps.size(); ++l) {
            const Quiver& qa = comps[l].quiver();
            const Quiver& qb = comps[l + 1].quiver();
            conn.emplace_back();
            for (auto [a, b] : arrow_pairs(qa, qb))
                conn.back().emplace_back(comps[l].field(), comps[l + 1].dim(qb.source(b)), comps[l].dim(qa.target(a)));
        }
        return NRep(std::move(comps), std::move(conn));
    }

    std::size_t levels() const { return components_.size(); }
    const F& field() const { return components_.front().field(); }
    const std::vector<Rep<F>>& components() const { return components_; }
    const Rep<F>& component(std::size_t m) const { return components_.at(m); }
    const Quiver& quiver(std::size_t m) const { return components_.at(m).quiver(); }

    std::vector<Quiver> quivers() const {
        std::vector<Quiver> qs;
        for (const auto& c : components_) qs.push_back(c.quiver());
        return qs;
    }

    const std::vector<std::vector<Matrix<F>>>& connectors() const { return connectors_; }
    const std::vector<Matrix<F>>& connectors(std::size_t level) const { return connectors_.at(level); }

    const Matrix<F>& connector(std::size_t level, std::size_t prev_arrow, std::size_t next_arrow) const {
        return connectors_.at(level).at(prev_arrow * quiver(level + 1).arrow_count() + next_arrow);
    }

    std::size_t total_dim() const {
        std::size_t n = 0;
        for (const auto& c : components_) n += c.total_dim();
        return n;
    }
    bool is_zero() const { return total_dim() == 0; }

    /// Number of vertices over all components; the length of a flat morphism.
    std::size_t vertex_total() const {
        std::size_t n = 0;
        for (const auto& c : components_) n += c.quiver().vertex_count();
        return n;
    }

    bool operator==(const NRep& o) const { return components_ == o.components_ && connectors_ == o.connectors_; }

private:
    std::vector<Rep<F>> components_;
    std::vector<std::vector<Matrix<F>>> connectors_;
};

/// Validating constructor with sparse connectors; absent pairs are zero.
template <class F>
NRep<F> nrep_check(const std::vector<Quiver>& quivers, std::vector<Rep<F>> components,
                   const std::map<ConnectorKey, Matrix<F>>& connectors = {}) {
    if (quivers.size() != components.size())
        throw error(errc::component_quiver_mismatch, std::to_string(quivers.size()) + " quivers but " +
                                                         std::to_string(components.size()) + " components");
    for (std::size_t m = 0; m < quivers.size(); ++m)
        if (!(components[m].quiver() == quivers[m]))
            throw error(errc::component_quiver_mismatch, "component " + std::to_string(m + 1) +
                                                             " is not a representation of quiver " +
                                                             std::to_string(m + 1));
    auto base = NRep<F>::with_zero_connectors(std::move(components));
    auto conn = base.connectors();
    for (const auto& [key, mat] : connectors) {
        if (key.level + 1 >= base.levels() || key.prev_arrow >= base.quiver(key.level).arrow_count() ||
            key.next_arrow >= base.quiver(key.level + 1).arrow_count())
            throw error(errc::index_out_of_range, "connector key outside the arrow pairs");
        conn[key.level][key.prev_arrow * base.quiver(key.level + 1).arrow_count() + key.next_arrow] = mat;
    }
    return NRep<F>(base.components(), std::move(conn));
}

namespace detail {

template <class F>
void require_compatible(const NRep<F>& a, const NRep<F>& b) {
    if (a.levels() != b.levels()) throw error(errc::quiver_mismatch, "different numbers of levels");
    for (std::size_t m = 0; m < a.levels(); ++m)
        if (!(a.quiver(m) == b.quiver(m)))
            throw error(errc::quiver_mismatch, "quiver " + std::to_string(m + 1) + " differs");
    if (!(a.field() == b.field())) throw error(errc::field_mismatch, "n-representations over different fields");
}

template <class F>
std::optional<error> connector_violation(const NRep<F>& source, const NRep<F>& target,
                                         const std::vector<RepMorphism<F>>& comps) {
    for (std::size_t l = 0; l + 1 < source.levels(); ++l) {
        const Quiver& qa = source.quiver(l);
        const Quiver& qb = source.quiver(l + 1);
        for (auto [a, b] : arrow_pairs(qa, qb)) {
            auto lhs = comps[l + 1].at(qb.source(b)) * source.connector(l, a, b);
            auto rhs = target.connector(l, a, b) * comps[l].at(qa.target(a));
            if (!(lhs == rhs))
                return error(errc::non_commuting_square, "connector square at level " + std::to_string(l + 2) +
                                                             " for pair (" + qa.arrows()[a].id + ", " +
                                                             qb.arrows()[b].id + "), " +
                                                             describe_deviation(lhs, rhs));
        }
    }
    return std::nullopt;
}

template <class F>
std::optional<error> nrep_morphism_violation(const NRep<F>& source, const NRep<F>& target,
                                             const std::vector<Matrix<F>>& flat) {
    if (source.levels() != target.levels()) return error(errc::quiver_mismatch, "different numbers of levels");
    if (flat.size() != source.vertex_total())
        return error(errc::shape_mismatch, "expected " + std::to_string(source.vertex_total()) + " vertex maps");
    std::vector<RepMorphism<F>> comps;
    std::size_t pos = 0;
    for (std::size_t m = 0; m < source.levels(); ++m) {
        std::size_t nv = source.quiver(m).vertex_count();
        std::vector<Matrix<F>> part(flat.begin() + pos, flat.begin() + pos + nv);
        pos += nv;
        if (auto e = rep_morphism_violation(source.component(m), target.component(m), part))
            return error(e->code(), "component " + std::to_string(m + 1) + ": " + e->what());
        comps.emplace_back(source.component(m), target.component(m), std::move(part));
    }
    return connector_violation(source, target, comps);
}

} // namespace detail

/// Morphism of n-representations: one representation morphism per level,
/// with every connector square commuting. Checked on construction.
template <class F>
class NRepMorphism {
public:
    NRepMorphism(NRep<F> source, NRep<F> target, std::vector<RepMorphism<F>> comps)
        : source_(std::move(source)), target_(std::move(target)), comps_(std::move(comps)) {
        detail::require_compatible(source_, target_);
        if (comps_.size() != source_.levels())
            throw error(errc::shape_mismatch, "expected " + std::to_string(source_.levels()) + " components");
        for (std::size_t m = 0; m < comps_.size(); ++m)
            if (!(comps_[m].source() == source_.component(m)) || !(comps_[m].target() == target_.component(m)))
                throw error(errc::endpoint_mismatch, "component " + std::to_string(m + 1) + " has wrong endpoints");
        if (auto e = detail::connector_violation(source_, target_, comps_)) throw *e;
    }

    /// Vertex maps listed level by level, in vertex declaration order.
    static NRepMorphism from_flat(const NRep<F>& source, const NRep<F>& target, const std::vector<Matrix<F>>& flat) {
        detail::require_compatible(source, target);
        if (flat.size() != source.vertex_total())
            throw error(errc::shape_mismatch, "expected " + std::to_string(source.vertex_total()) + " vertex maps");
        std::vector<RepMorphism<F>> comps;
        std::size_t pos = 0;
        for (std::size_t m = 0; m < source.levels(); ++m) {
            std::size_t nv = source.quiver(m).vertex_count();
            try {
                comps.emplace_back(source.component(m), target.component(m),
                                   std::vector<Matrix<F>>(flat.begin() + pos, flat.begin() + pos + nv));
            } catch (const error& e) {
                throw error(e.code(), "component " + std::to_string(m + 1) + ": " + e.what());
            }
            pos += nv;
        }
        return NRepMorphism(source, target, std::move(comps));
    }

    static NRepMorphism identity(const NRep<F>& x) {
        std::vector<RepMorphism<F>> comps;
        for (const auto& c : x.components()) comps.push_back(RepMorphism<F>::identity(c));
        return NRepMorphism(x, x, std::move(comps));
    }

    static NRepMorphism zero(const NRep<F>& source, const NRep<F>& target) {
        detail::require_compatible(source, target);
        std::vector<RepMorphism<F>> comps;
        for (std::size_t m = 0; m < source.levels(); ++m)
            comps.push_back(RepMorphism<F>::zero(source.component(m), target.component(m)));
        return NRepMorphism(source, target, std::move(comps));
    }

    const NRep<F>& source() const { return source_; }
    const NRep<F>& target() const { return target_; }
    const std::vector<RepMorphism<F>>& comps() const { return comps_; }
    const RepMorphism<F>& component(std::size_t m) const { return comps_.at(m); }

    std::vector<Matrix<F>> flat() const {
        std::vector<Matrix<F>> all;
        for (const auto& c : comps_) all.insert(all.end(), c.comps().begin(), c.comps().end());
        return all;
    }

    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    bool operator==(const NRepMorphism& o) const {
        return comps_ == o.comps_ && source_ == o.source_ && target_ == o.target_;
    }

private:
    NRep<F> source_;
    NRep<F> target_;
    std::vector<RepMorphism<F>> comps_;
};

template <class F>
NRepMorphism<F> nmorphism_check(const NRep<F>& source, const NRep<F>& target, const std::vector<Matrix<F>>& flat) {
    return NRepMorphism<F>::from_flat(source, target, flat);
}

/// Non-throwing check over a flat list of vertex maps.
template <class F>
bool is_morphism(const NRep<F>& source, const NRep<F>& target, const std::vector<Matrix<F>>& flat) {
    return !detail::nrep_morphism_violation(source, target, flat).has_value();
}

template <class F>
NRepMorphism<F> compose(const NRepMorphism<F>& g, const NRepMorphism<F>& f) {
    if (!(f.target() == g.source())) throw error(errc::endpoint_mismatch, "compose: target of f is not source of g");
    std::vector<RepMorphism<F>> comps;
    for (std::size_t m = 0; m < f.comps().size(); ++m) comps.push_back(compose(g.component(m), f.component(m)));
    return NRepMorphism<F>(f.source(), g.target(), std::move(comps));
}

template <class F>
NRepMorphism<F> add(const NRepMorphism<F>& f, const NRepMorphism<F>& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
        throw error(errc::endpoint_mismatch, "add: morphisms with different endpoints");
    std::vector<RepMorphism<F>> comps;
    for (std::size_t m = 0; m < f.comps().size(); ++m) comps.push_back(add(f.component(m), g.component(m)));
    return NRepMorphism<F>(f.source(), f.target(), std::move(comps));
}

template <class F>
NRepMorphism<F> scale(const typename F::value_type& lambda, const NRepMorphism<F>& f) {
    std::vector<RepMorphism<F>> comps;
    for (const auto& c : f.comps()) comps.push_back(scale(lambda, c));
    return NRepMorphism<F>(f.source(), f.target(), std::move(comps));
}

template <class F>
NRepMorphism<F> subtract(const NRepMorphism<F>& f, const NRepMorphism<F>& g) {
    const F& k = f.source().field();
    return add(f, scale(k.neg(k.one()), g));
}

/// Component squares of every level stacked with every connector square.
/// Blocks are listed level by level in vertex order, matching flat().
template <class F>
HomSystem<F> hom_system(const NRep<F>& a, const NRep<F>& b) {
    detail::require_compatible(a, b);
    detail::SquareSystem<F> sys(a.field());
    std::vector<std::vector<detail::Block>> level_blocks;
    for (std::size_t m = 0; m < a.levels(); ++m) {
        level_blocks.emplace_back();
        for (std::size_t v = 0; v < a.quiver(m).vertex_count(); ++v)
            level_blocks.back().push_back(sys.add_block(b.component(m).dim(v), a.component(m).dim(v)));
    }
    for (std::size_t m = 0; m < a.levels(); ++m) {
        const Quiver& q = a.quiver(m);
        for (std::size_t x = 0; x < q.arrow_count(); ++x)
            sys.add_square(level_blocks[m][q.target(x)], a.component(m).map(x), b.component(m).map(x),
                           level_blocks[m][q.source(x)]);
    }
    for (std::size_t l = 0; l + 1 < a.levels(); ++l) {
        const Quiver& qa = a.quiver(l);
        const Quiver& qb = a.quiver(l + 1);
        for (auto [x, y] : arrow_pairs(qa, qb))
            sys.add_square(level_blocks[l + 1][qb.source(y)], a.connector(l, x, y), b.connector(l, x, y),
                           level_blocks[l][qa.target(x)]);
    }
    std::vector<detail::Block> blocks;
    for (auto& lb : level_blocks) blocks.insert(blocks.end(), lb.begin(), lb.end());
    return {sys.coefficients(), std::move(blocks)};
}

template <class F>
std::vector<NRepMorphism<F>> hom_basis(const NRep<F>& a, const NRep<F>& b) {
    auto sys = hom_system(a, b);
    auto sol = nullspace_basis(sys.coefficients);
    std::vector<NRepMorphism<F>> basis;
    for (std::size_t j = 0; j < sol.cols(); ++j) {
        std::vector<Matrix<F>> flat;
        for (const auto& blk : sys.blocks) flat.push_back(detail::SquareSystem<F>::extract(sol, j, blk));
        basis.push_back(NRepMorphism<F>::from_flat(a, b, flat));
    }
    return basis;
}

/// Component-wise direct sums with block-diagonal connectors.
template <class F>
DirectSum<NRep<F>, NRepMorphism<F>> direct_sum(const NRep<F>& a, const NRep<F>& b) {
    detail::require_compatible(a, b);
    std::vector<DirectSum<Rep<F>, RepMorphism<F>>> parts;
    std::vector<Rep<F>> comps;
    for (std::size_t m = 0; m < a.levels(); ++m) {
        parts.push_back(direct_sum(a.component(m), b.component(m)));
        comps.push_back(parts.back().sum);
    }
    std::vector<std::vector<Matrix<F>>> conn;
    for (std::size_t l = 0; l + 1 < a.levels(); ++l) {
        conn.emplace_back();
        for (std::size_t i = 0; i < a.connectors(l).size(); ++i)
            conn.back().push_back(block_diag(a.connectors(l)[i], b.connectors(l)[i]));
    }
    NRep<F> sum(std::move(comps), std::move(conn));
    std::array<std::vector<RepMorphism<F>>, 4> mors;
    for (const auto& p : parts) {
        mors[0].push_back(p.injections[0]);
        mors[1].push_back(p.injections[1]);
        mors[2].push_back(p.projections[0]);
        mors[3].push_back(p.projections[1]);
    }
    return {sum,
            {NRepMorphism<F>(a, sum, std::move(mors[0])), NRepMorphism<F>(b, sum, std::move(mors[1]))},
            {NRepMorphism<F>(sum, a, std::move(mors[2])), NRepMorphism<F>(sum, b, std::move(mors[3]))}};
}

/// Component-wise kernels; each connector is the restriction of the source
/// connector, which lands in the next kernel because the connector square of
/// f commutes.
template <class F>
Kernel<NRep<F>, NRepMorphism<F>> kernel(const NRepMorphism<F>& f) {
    const NRep<F>& src = f.source();
    std::vector<Kernel<Rep<F>, RepMorphism<F>>> parts;
    std::vector<Rep<F>> comps;
    std::vector<RepMorphism<F>> incl;
    for (const auto& c : f.comps()) {
        parts.push_back(kernel(c));
        comps.push_back(parts.back().object);
        incl.push_back(parts.back().inclusion);
    }
    std::vector<std::vector<Matrix<F>>> conn;
    for (std::size_t l = 0; l + 1 < src.levels(); ++l) {
        const Quiver& qa = src.quiver(l);
        const Quiver& qb = src.quiver(l + 1);
        conn.emplace_back();
        for (auto [a, b] : arrow_pairs(qa, qb))
            conn.back().push_back(solve_through(incl[l + 1].at(qb.source(b)),
                                                src.connector(l, a, b) * incl[l].at(qa.target(a))));
    }
    NRep<F> object(std::move(comps), std::move(conn));
    NRepMorphism<F> inclusion(object, src, std::move(incl));
    return {std::move(object), std::move(inclusion)};
}

/// Component-wise cokernels; each connector is induced on the quotients,
/// w + im f -> psi'(w) + im f', after checking that it is well defined.
template <class F>
Cokernel<NRep<F>, NRepMorphism<F>> cokernel(const NRepMorphism<F>& f) {
    const NRep<F>& tgt = f.target();
    std::vector<Rep<F>> comps;
    std::vector<RepMorphism<F>> proj;
    for (const auto& c : f.comps()) {
        auto part = cokernel(c);
        comps.push_back(std::move(part.object));
        proj.push_back(std::move(part.projection));
    }
    std::vector<std::vector<Matrix<F>>> conn;
    for (std::size_t l = 0; l + 1 < tgt.levels(); ++l) {
        const Quiver& qa = tgt.quiver(l);
        const Quiver& qb = tgt.quiver(l + 1);
        conn.emplace_back();
        for (auto [a, b] : arrow_pairs(qa, qb)) {
            const auto& fa = f.component(l).at(qa.target(a));
            auto image = colspace_basis(fa);
            auto quo = quotient_projection(image, fa.rows());
            auto pushed = proj[l + 1].at(qb.source(b)) * tgt.connector(l, a, b);
            if (!(pushed * image).is_zero())
                throw std::logic_error("induced cokernel connector depends on the chosen section");
            conn.back().push_back(pushed * quo.section);
        }
    }
    NRep<F> object(std::move(comps), std::move(conn));
    NRepMorphism<F> projection(tgt, object, std::move(proj));
    return {std::move(object), std::move(projection)};
}

template <class F>
CanonicalDecomposition<NRep<F>, NRepMorphism<F>> canonical_decomposition(const NRepMorphism<F>& f) {
    return detail::canonical_decomposition_impl(f);
}

/// The n-representation with v in slot j and zeros elsewhere.
template <class F>
NRep<F> embed_component(const std::vector<Quiver>& quivers, std::size_t j, const Rep<F>& v) {
    if (j >= quivers.size()) throw error(errc::index_out_of_range, "component index " + std::to_string(j + 1));
    if (!(quivers[j] == v.quiver()))
        throw error(errc::quiver_mismatch, "representation does not live on quiver " + std::to_string(j + 1));
    std::vector<Rep<F>> comps;
    for (std::size_t m = 0; m < quivers.size(); ++m)
        comps.push_back(m == j ? v : Rep<F>::zero(quivers[m], v.field()));
    return NRep<F>::with_zero_connectors(std::move(comps));
}

template <class F>
NRepMorphism<F> embed_component(const std::vector<Quiver>& quivers, std::size_t j, const RepMorphism<F>& f) {
    auto src = embed_component(quivers, j, f.source());
    auto tgt = embed_component(quivers, j, f.target());
    std::vector<RepMorphism<F>> comps;
    for (std::size_t m = 0; m < quivers.size(); ++m)
        comps.push_back(m == j ? f : RepMorphism<F>::zero(src.component(m), tgt.component(m)));
    return NRepMorphism<F>(src, tgt, std::move(comps));
}

template <class F>
const Rep<F>& project_component(const NRep<F>& x, std::size_t j) {
    if (j >= x.levels()) throw error(errc::index_out_of_range, "component index " + std::to_string(j + 1));
    return x.component(j);
}

/// First m components and the first m - 1 connector levels.
template <class F>
NRep<F> truncate(const NRep<F>& x, std::size_t m) {
    if (m < 1 || m > x.levels()) throw error(errc::index_out_of_range, "truncation to " + std::to_string(m));
    std::vector<Rep<F>> comps(x.components().begin(), x.components().begin() + m);
    std::vector<std::vector<Matrix<F>>> conn(x.connectors().begin(), x.connectors().begin() + (m - 1));
    return NRep<F>(std::move(comps), std::move(conn));
}

template <class F>
NRepMorphism<F> truncate(const NRepMorphism<F>& f, std::size_t m) {
    auto src = truncate(f.source(), m);
    auto tgt = truncate(f.target(), m);
    return NRepMorphism<F>(src, tgt, std::vector<RepMorphism<F>>(f.comps().begin(), f.comps().begin() + m));
}

} // namespace qrep
