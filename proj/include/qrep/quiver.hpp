#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qrep/error.hpp"

namespace qrep {

struct Arrow {
    std::string id;
    std::string source;
    std::string target;

    bool operator==(const Arrow&) const = default;
};

/// Finite directed multigraph with named vertices and arrows. Internally
/// vertices and arrows are addressed by their declaration positions.
class Quiver {
public:
    Quiver() = default;

    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
        : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (vertices_[i] == vertices_[j]) throw error(errc::duplicate_id, "vertex '" + vertices_[i] + "'");
        for (std::size_t i = 0; i < arrows_.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j)
                if (arrows_[i].id == arrows_[j].id) throw error(errc::duplicate_id, "arrow '" + arrows_[i].id + "'");
            auto s = find_vertex(arrows_[i].source);
            auto t = find_vertex(arrows_[i].target);
            if (!s || !t)
                throw error(errc::dangling_endpoint, "arrow '" + arrows_[i].id + "' has an undeclared endpoint");
            source_.push_back(*s);
            target_.push_back(*t);
        }
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }

    std::size_t source(std::size_t arrow) const { return source_.at(arrow); }
    std::size_t target(std::size_t arrow) const { return target_.at(arrow); }

    std::optional<std::size_t> find_vertex(std::string_view id) const {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i] == id) return i;
        return std::nullopt;
    }

    std::optional<std::size_t> find_arrow(std::string_view id) const {
        for (std::size_t i = 0; i < arrows_.size(); ++i)
            if (arrows_[i].id == id) return i;
        return std::nullopt;
    }

    std::size_t vertex_index(std::string_view id) const {
        if (auto i = find_vertex(id)) return *i;
        throw error(errc::unresolved_name, "no vertex '" + std::string(id) + "'");
    }

    std::size_t arrow_index(std::string_view id) const {
        if (auto i = find_arrow(id)) return *i;
        throw error(errc::unresolved_name, "no arrow '" + std::string(id) + "'");
    }

    bool operator==(const Quiver& o) const { return vertices_ == o.vertices_ && arrows_ == o.arrows_; }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::size_t> source_;
    std::vector<std::size_t> target_;
};

struct ValidationReport {
    bool finite = true;
    bool connected = false;
    bool acyclic = false;

    bool standard() const { return finite && connected && acyclic; }
};

namespace detail {

// Kahn's algorithm; ready vertices are taken smallest declaration index first.
inline std::vector<std::size_t> kahn_order(const Quiver& q) {
    std::vector<std::size_t> in_degree(q.vertex_count(), 0);
    std::vector<std::vector<std::size_t>> out(q.vertex_count());
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        ++in_degree[q.target(a)];
        out[q.source(a)].push_back(q.target(a));
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        if (in_degree[v] == 0) ready.push(v);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        std::size_t v = ready.top();
        ready.pop();
        order.push_back(v);
        for (std::size_t w : out[v])
            if (--in_degree[w] == 0) ready.push(w);
    }
    return order;
}

} // namespace detail

/// Reports the standing assumptions (finite, connected, acyclic) without
/// rejecting anything. The empty quiver is reported as not connected.
inline ValidationReport validate(const Quiver& q) {
    ValidationReport report;
    report.acyclic = detail::kahn_order(q).size() == q.vertex_count();

    std::size_t n = q.vertex_count();
    if (n > 0) {
        std::vector<std::size_t> parent(n);
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::size_t components = n;
        for (std::size_t a = 0; a < q.arrow_count(); ++a) {
            auto s = find(q.source(a)), t = find(q.target(a));
            if (s != t) {
                parent[s] = t;
                --components;
            }
        }
        report.connected = components == 1;
    }
    return report;
}

/// Every (arrow of q, arrow of q2) index pair, q's arrow varying slowest.
inline std::vector<std::pair<std::size_t, std::size_t>> arrow_pairs(const Quiver& q, const Quiver& q2) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(q.arrow_count() * q2.arrow_count());
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        for (std::size_t b = 0; b < q2.arrow_count(); ++b) pairs.emplace_back(a, b);
    return pairs;
}

inline std::vector<std::string> topo_order(const Quiver& q) {
    auto order = detail::kahn_order(q);
    if (order.size() != q.vertex_count()) throw error(errc::cyclic_quiver, "quiver has a directed cycle");
    std::vector<std::string> ids;
    for (auto v : order) ids.push_back(q.vertices()[v]);
    return ids;
}

} // namespace qrep
