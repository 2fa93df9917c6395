#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qrep/error.hpp"
#include "qrep/field.hpp"
#include "qrep/format.hpp"
#include "qrep/linalg.hpp"
#include "qrep/nrep.hpp"

namespace qrep {

struct TrialConfig {
    FieldSpec field = FieldSpec::prime(5);
    std::size_t max_vertices = 4;
    std::size_t max_arrows = 5;
    std::size_t max_dim = 3;
    std::size_t min_levels = 2;
    std::size_t max_levels = 3;
    std::size_t trials = 200;
    std::size_t probes = 3;   ///< test morphisms per universal-property check
    std::uint64_t seed = 42;

    void validate() const {
        if (max_vertices < 1 || max_arrows < 1 || max_dim < 1 || min_levels < 1 || trials < 1 || probes < 1)
            throw error(errc::index_out_of_range, "trial bounds must be at least 1");
        if (min_levels > max_levels) throw error(errc::index_out_of_range, "min_levels exceeds max_levels");
    }
};

enum class Law {
    hom_abelian_group,
    composition_biadditive,
    biproduct_identities,
    kernel_universal,
    cokernel_universal,
    canonical_ji_eq_f,
    canonical_image_ker_coker,
    hom_additivity_dirsum,
    rank_nullity,
};

inline constexpr std::array<Law, 9> all_laws{
    Law::hom_abelian_group,  Law::composition_biadditive, Law::biproduct_identities,
    Law::kernel_universal,   Law::cokernel_universal,     Law::canonical_ji_eq_f,
    Law::canonical_image_ker_coker, Law::hom_additivity_dirsum, Law::rank_nullity,
};

inline const char* law_name(Law law) {
    switch (law) {
    case Law::hom_abelian_group: return "hom_abelian_group";
    case Law::composition_biadditive: return "composition_biadditive";
    case Law::biproduct_identities: return "biproduct_identities";
    case Law::kernel_universal: return "kernel_universal";
    case Law::cokernel_universal: return "cokernel_universal";
    case Law::canonical_ji_eq_f: return "canonical_ji_eq_f";
    case Law::canonical_image_ker_coker: return "canonical_image_ker_coker";
    case Law::hom_additivity_dirsum: return "hom_additivity_dirsum";
    case Law::rank_nullity: return "rank_nullity";
    }
    return "?";
}

inline std::optional<Law> parse_law(std::string_view name) {
    for (Law l : all_laws)
        if (name == law_name(l)) return l;
    return std::nullopt;
}

struct Failure {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::string message;
    std::string counterexample;   ///< a document in the file format
};

struct Verdict {
    std::string law;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<Failure> failures;

    bool passed() const { return failures.empty(); }
};

inline std::string render(const Verdict& v) {
    std::ostringstream os;
    os << v.law << ": " << (v.passed() ? "PASS" : "FAIL") << " (" << v.trials << " trials, " << v.failures.size()
       << " failures, seed " << v.seed << ")\n";
    for (const auto& f : v.failures) {
        os << "  trial " << f.trial << " (seed " << f.seed << "): " << f.message << "\n";
        if (!f.counterexample.empty()) {
            std::istringstream lines(f.counterexample);
            for (std::string line; std::getline(lines, line);) os << "    " << line << "\n";
        }
    }
    return os.str();
}

enum class UniversalKind { kernel, cokernel };

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) { return splitmix64(seed ^ splitmix64(trial)); }

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

template <class Mor>
Matrix<typename std::decay_t<decltype(std::declval<Mor>().source())>::field_type> flatten_column(const Mor& f) {
    using F = typename std::decay_t<decltype(f.source())>::field_type;
    const auto parts = f.flat();
    std::size_t n = 0;
    for (const auto& m : parts) n += m.rows() * m.cols();
    Matrix<F> col(f.source().field(), n, 1);
    std::size_t i = 0;
    for (const auto& m : parts)
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) col(i++, 0) = m(r, c);
    return col;
}

template <class Mor, class F>
Mor combine(const std::vector<Mor>& basis, const std::vector<typename F::value_type>& coeffs, const Mor& zero) {
    Mor out = zero;
    for (std::size_t i = 0; i < basis.size(); ++i) out = add(out, scale(coeffs[i], basis[i]));
    return out;
}

} // namespace detail

/// A connected acyclic quiver: a random spanning tree plus extra arrows, all
/// oriented along a random vertex order. Parallel arrows are allowed.
inline Quiver random_quiver(const TrialConfig& cfg, std::mt19937_64& rng) {
    std::size_t n = detail::uniform(rng, 1, cfg.max_vertices);
    n = std::min(n, cfg.max_arrows + 1);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t v = 1; v < n; ++v) edges.emplace_back(detail::uniform(rng, 0, v - 1), v);
    if (n > 1) {
        std::size_t extra = detail::uniform(rng, 0, cfg.max_arrows - (n - 1));
        for (std::size_t e = 0; e < extra; ++e) {
            std::size_t a = detail::uniform(rng, 0, n - 1), b = detail::uniform(rng, 0, n - 2);
            if (b >= a) ++b;
            edges.emplace_back(a, b);
        }
    }
    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < n; ++v) vertices.push_back(std::to_string(v + 1));
    std::vector<Arrow> arrows;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [a, b] = edges[e];
        if (rank[a] > rank[b]) std::swap(a, b);
        arrows.push_back({"a" + std::to_string(e + 1), vertices[a], vertices[b]});
    }
    return Quiver(std::move(vertices), std::move(arrows));
}

template <class F, class Rng>
Matrix<F> random_matrix(const F& k, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix<F> m(k, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = k.random(rng);
    return m;
}

template <class F>
Rep<F> random_rep(const Quiver& q, const F& k, const TrialConfig& cfg, std::mt19937_64& rng) {
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) dims.push_back(detail::uniform(rng, 0, cfg.max_dim));
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        maps.push_back(random_matrix(k, dims[q.target(a)], dims[q.source(a)], rng));
    return Rep<F>(q, k, std::move(dims), std::move(maps));
}

template <class F>
NRep<F> random_nrep_on(const std::vector<Quiver>& quivers, const F& k, const TrialConfig& cfg, std::mt19937_64& rng) {
    std::vector<Rep<F>> comps;
    for (const auto& q : quivers) comps.push_back(random_rep(q, k, cfg, rng));
    std::vector<std::vector<Matrix<F>>> conn;
    for (std::size_t l = 0; l + 1 < comps.size(); ++l) {
        conn.emplace_back();
        for (auto [a, b] : arrow_pairs(quivers[l], quivers[l + 1]))
            conn.back().push_back(random_matrix(k, comps[l + 1].dim(quivers[l + 1].source(b)),
                                                comps[l].dim(quivers[l].target(a)), rng));
    }
    return NRep<F>(std::move(comps), std::move(conn));
}

template <class F>
std::vector<Quiver> random_quivers(const TrialConfig& cfg, std::mt19937_64& rng) {
    std::size_t n = detail::uniform(rng, cfg.min_levels, cfg.max_levels);
    std::vector<Quiver> qs;
    for (std::size_t m = 0; m < n; ++m) qs.push_back(random_quiver(cfg, rng));
    return qs;
}

/// Deterministic per seed: random quivers, dims and entries within the bounds.
template <class F>
NRep<F> random_nrep(const F& k, const TrialConfig& cfg, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto qs = random_quivers<F>(cfg, rng);
    return random_nrep_on(qs, k, cfg, rng);
}

/// A random field combination of hom_basis(a, b).
template <class Obj>
auto random_morphism(const Obj& a, const Obj& b, std::mt19937_64& rng) {
    auto basis = hom_basis(a, b);
    using Mor = typename decltype(basis)::value_type;
    using F = typename Obj::field_type;
    std::vector<typename F::value_type> c;
    for (std::size_t i = 0; i < basis.size(); ++i) c.push_back(a.field().random(rng));
    return detail::combine<Mor, F>(basis, c, Mor::zero(a, b));
}

namespace detail {

/// Random g : d -> x with f o g = 0 (kernel side) or g : y -> d with
/// g o f = 0 (cokernel side), drawn from the annihilating subspace of the
/// full Hom space. Independent of any kernel/cokernel construction.
template <class Obj, class Mor>
Mor annihilating_probe(UniversalKind kind, const Mor& f, const Obj& d, std::mt19937_64& rng) {
    using F = typename Obj::field_type;
    const F& k = d.field();
    auto basis = kind == UniversalKind::kernel ? hom_basis(d, f.source()) : hom_basis(f.target(), d);
    std::vector<Matrix<F>> cols;
    for (const auto& b : basis)
        cols.push_back(flatten_column(kind == UniversalKind::kernel ? compose(f, b) : compose(b, f)));
    Mor zero = kind == UniversalKind::kernel ? Mor::zero(d, f.source()) : Mor::zero(f.target(), d);
    if (basis.empty()) return zero;
    Matrix<F> images = cols.front();
    for (std::size_t i = 1; i < cols.size(); ++i) images = hstack(images, cols[i]);
    auto null = nullspace_basis(images);
    std::vector<typename F::value_type> coeffs(basis.size(), k.zero());
    for (std::size_t j = 0; j < null.cols(); ++j) {
        auto r = k.random(rng);
        for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] = k.add(coeffs[i], k.mul(r, null(i, j)));
    }
    return combine<Mor, F>(basis, coeffs, zero);
}

} // namespace detail

/// Checks that (obj, arrow) has the universal property of the kernel (arrow
/// into f's source) or cokernel (arrow out of f's target) against `probes`
/// test morphisms. Existence: the vertex-wise solve succeeds and assembles
/// into a morphism that factors g. Uniqueness: the arrow is vertex-wise
/// injective (kernel) or surjective (cokernel).
template <class Obj, class Mor>
Verdict verify_universal(UniversalKind kind, const Mor& f, const Obj& obj, const Mor& arrow, std::size_t probes,
                         std::uint64_t seed) {
    const bool ker = kind == UniversalKind::kernel;
    auto vanishing = ker ? compose(f, arrow) : compose(arrow, f);
    if (!vanishing.is_zero())
        throw error(errc::candidate_not_annihilating,
                    ker ? "candidate inclusion does not compose with f to zero"
                        : "candidate projection does not compose with f to zero");

    Verdict v{ker ? "kernel_universal" : "cokernel_universal", probes, seed, {}};
    const auto av = arrow.flat();
    bool unique = true;
    for (const auto& m : av)
        if (rank(m) != (ker ? m.cols() : m.rows())) unique = false;

    for (std::size_t i = 0; i < probes; ++i) {
        std::uint64_t s = detail::trial_seed(seed, i);
        std::mt19937_64 rng(s);
        auto fail = [&](const std::string& msg) { v.failures.push_back({i, s, msg, {}}); };
        if (!unique) {
            fail(ker ? "inclusion is not injective at some vertex" : "projection is not surjective at some vertex");
            continue;
        }
        const Obj& base = ker ? f.source() : f.target();
        Obj d = i % 3 == 0 ? base : i % 3 == 1 ? obj : direct_sum(base, obj).sum;
        auto g = detail::annihilating_probe(kind, f, d, rng);
        const auto gv = g.flat();
        std::vector<Matrix<typename Obj::field_type>> hv;
        try {
            for (std::size_t x = 0; x < gv.size(); ++x)
                hv.push_back(ker ? solve_through(av[x], gv[x])
                                 : solve_through(av[x].transpose(), gv[x].transpose()).transpose());
        } catch (const error& e) {
            fail(std::string("no mediating map: ") + e.what());
            continue;
        }
        try {
            auto h = ker ? Mor::from_flat(d, obj, hv) : Mor::from_flat(obj, d, hv);
            if (!((ker ? compose(arrow, h) : compose(h, arrow)) == g)) fail("mediating morphism does not factor g");
        } catch (const error& e) {
            fail(std::string("mediating maps are not a morphism: ") + e.what());
        }
    }
    return v;
}

/// Counts all vertex-map tuples a -> b passing the morphism check by
/// exhaustive enumeration. Refuses more than `cap` tuples.
template <class F>
std::uint64_t brute_hom_count(const NRep<F>& a, const NRep<F>& b, std::uint64_t cap = 1u << 16) {
    if constexpr (!std::is_same_v<F, PrimeField>) {
        throw error(errc::rationals_not_supported, "exhaustive Hom counting needs a finite field");
    } else {
        detail::require_compatible(a, b);
        const PrimeField& k = a.field();
        std::vector<std::pair<std::size_t, std::size_t>> shapes;
        for (std::size_t m = 0; m < a.levels(); ++m)
            for (std::size_t v = 0; v < a.quiver(m).vertex_count(); ++v)
                shapes.emplace_back(b.component(m).dim(v), a.component(m).dim(v));
        std::size_t unknowns = 0;
        for (auto [r, c] : shapes) unknowns += r * c;
        std::uint64_t space = 1;
        for (std::size_t i = 0; i < unknowns; ++i) {
            space *= k.characteristic();
            if (space > cap)
                throw error(errc::too_large, std::to_string(unknowns) + " unknowns over " + k.spec().to_string() +
                                                 " exceed the enumeration cap " + std::to_string(cap));
        }
        std::vector<std::uint32_t> digits(unknowns, 0);
        std::uint64_t count = 0;
        for (std::uint64_t n = 0; n < space; ++n) {
            std::size_t pos = 0;
            std::vector<Matrix<F>> flat;
            for (auto [r, c] : shapes) {
                Matrix<F> m(k, r, c);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < c; ++j) m(i, j) = digits[pos++];
                flat.push_back(std::move(m));
            }
            if (is_morphism(a, b, flat)) ++count;
            for (auto& d : digits) {
                if (++d < k.characteristic()) break;
                d = 0;
            }
        }
        return count;
    }
}

namespace detail {

template <class F>
struct Trial {
    const F& k;
    const TrialConfig& cfg;
    std::mt19937_64 rng;
    Document<F> witness;

    Trial(const F& field, const TrialConfig& c, std::uint64_t seed) : k(field), cfg(c), rng(seed), witness(field) {}

    NRep<F> object(const std::vector<Quiver>& qs, const std::string& name) {
        auto x = random_nrep_on(qs, k, cfg, rng);
        witness.add_nrep(name, x);
        return x;
    }

    NRepMorphism<F> morphism(const std::string& name, const std::string& src, const NRep<F>& a,
                             const std::string& tgt, const NRep<F>& b) {
        auto f = random_morphism(a, b, rng);
        witness.add_morphism(name, src, tgt, f);
        return f;
    }

    void record(const std::string& name, const NRep<F>& x) { witness.add_nrep(name, x); }

    /// Source and target for a random morphism; sharing a summand X makes
    /// the Hom space, kernels and images non-trivial more often.
    std::pair<NRep<F>, NRep<F>> endpoints() {
        auto qs = random_quivers<F>(cfg, rng);
        auto x = object(qs, "X");
        switch (uniform(rng, 0, 4)) {
        case 0: return {x, x};
        case 1: {
            auto s = direct_sum(x, object(qs, "Z1")).sum;
            auto t = direct_sum(x, object(qs, "Z2")).sum;
            return {s, t};
        }
        case 2: return {x, direct_sum(x, object(qs, "Z")).sum};
        case 3: return {direct_sum(x, object(qs, "Z")).sum, x};
        default: return {x, object(qs, "Y")};
        }
    }

    NRepMorphism<F> random_arrow() {
        auto [s, t] = endpoints();
        record("S", s);
        record("T", t);
        return morphism("f", "S", s, "T", t);
    }
};

template <class F>
std::optional<std::string> check_law(Law law, Trial<F>& t, std::uint64_t seed) {
    using Mor = NRepMorphism<F>;
    const F& k = t.k;
    switch (law) {
    case Law::hom_abelian_group: {
        auto [s, tg] = t.endpoints();
        t.record("S", s);
        t.record("T", tg);
        auto f = t.morphism("f", "S", s, "T", tg);
        auto g = t.morphism("g", "S", s, "T", tg);
        auto h = t.morphism("h", "S", s, "T", tg);
        auto zero = Mor::zero(s, tg);
        if (!(add(add(f, g), h) == add(f, add(g, h)))) return "(f + g) + h != f + (g + h)";
        if (!(add(f, g) == add(g, f))) return "f + g != g + f";
        if (!(add(f, zero) == f)) return "f + 0 != f";
        if (!add(f, scale(k.neg(k.one()), f)).is_zero()) return "f + (-1)f != 0";
        return std::nullopt;
    }
    case Law::composition_biadditive: {
        auto [s, tg] = t.endpoints();
        t.record("S", s);
        t.record("T", tg);
        auto f = t.morphism("f", "S", s, "T", tg);
        auto g = t.morphism("g", "S", s, "T", tg);
        auto h = t.morphism("h", "T", tg, "T", tg);
        auto e = t.morphism("e", "S", s, "S", s);
        auto lambda = k.random(t.rng);
        if (!(compose(h, add(f, g)) == add(compose(h, f), compose(h, g)))) return "h(f + g) != hf + hg";
        if (!(compose(add(f, g), e) == add(compose(f, e), compose(g, e)))) return "(f + g)e != fe + ge";
        if (!(compose(h, scale(lambda, f)) == scale(lambda, compose(h, f)))) return "h(cf) != c(hf)";
        if (!(compose(f, Mor::identity(s)) == f) || !(compose(Mor::identity(tg), f) == f)) return "identity law fails";
        return std::nullopt;
    }
    case Law::biproduct_identities: {
        auto qs = random_quivers<F>(t.cfg, t.rng);
        auto a = t.object(qs, "A");
        auto b = t.object(qs, "B");
        auto ds = direct_sum(a, b);
        const auto& [i0, i1] = ds.injections;
        const auto& [p0, p1] = ds.projections;
        if (!(compose(p0, i0) == Mor::identity(a)) || !(compose(p1, i1) == Mor::identity(b)))
            return "p_k i_k != id";
        if (!compose(p0, i1).is_zero() || !compose(p1, i0).is_zero()) return "p_k i_l != 0 for k != l";
        if (!(add(compose(i0, p0), compose(i1, p1)) == Mor::identity(ds.sum))) return "i0 p0 + i1 p1 != id";
        return std::nullopt;
    }
    case Law::kernel_universal:
    case Law::cokernel_universal: {
        auto f = t.random_arrow();
        bool ker = law == Law::kernel_universal;
        Verdict v = ker ? [&] {
            auto kk = kernel(f);
            return verify_universal(UniversalKind::kernel, f, kk.object, kk.inclusion, t.cfg.probes, seed);
        }()
                        : [&] {
            auto cc = cokernel(f);
            return verify_universal(UniversalKind::cokernel, f, cc.object, cc.projection, t.cfg.probes, seed);
        }();
        if (!v.passed()) return "probe " + std::to_string(v.failures.front().trial) + ": " + v.failures.front().message;
        return std::nullopt;
    }
    case Law::canonical_ji_eq_f: {
        auto f = t.random_arrow();
        auto d = canonical_decomposition(f);
        if (!d.ji_eq_f) return "j iota != f";
        if (!d.image_rank) return "dim I_v != rank f_v at some vertex";
        return std::nullopt;
    }
    case Law::canonical_image_ker_coker: {
        auto f = t.random_arrow();
        auto d = canonical_decomposition(f);
        if (!d.kernel_cokernel) return "(K, k) or (C, c) fails the kernel/cokernel characterisation";
        if (!d.image_coker_ker) return "(I, iota) != Coker k or (I, j) != Ker c";
        if (!compose(d.c, d.j).is_zero()) return "c j != 0";
        auto up = verify_universal(UniversalKind::cokernel, d.k, d.I, d.iota, t.cfg.probes, seed);
        if (!up.passed()) return "(I, iota) is not a cokernel of k: " + up.failures.front().message;
        auto down = verify_universal(UniversalKind::kernel, d.c, d.I, d.j, t.cfg.probes, seed + 1);
        if (!down.passed()) return "(I, j) is not a kernel of c: " + down.failures.front().message;
        return std::nullopt;
    }
    case Law::hom_additivity_dirsum: {
        auto qs = random_quivers<F>(t.cfg, t.rng);
        auto a = t.object(qs, "A");
        auto b = t.object(qs, "B");
        auto c = t.object(qs, "C");
        auto ab = direct_sum(a, b).sum;
        auto first = hom_basis(ab, c).size(), split_first = hom_basis(a, c).size() + hom_basis(b, c).size();
        if (first != split_first)
            return "dim Hom(A+B, C) = " + std::to_string(first) + " but dim Hom(A,C) + dim Hom(B,C) = " +
                   std::to_string(split_first);
        auto second = hom_basis(c, ab).size(), split_second = hom_basis(c, a).size() + hom_basis(c, b).size();
        if (second != split_second)
            return "dim Hom(C, A+B) = " + std::to_string(second) + " but dim Hom(C,A) + dim Hom(C,B) = " +
                   std::to_string(split_second);
        return std::nullopt;
    }
    case Law::rank_nullity: {
        auto f = t.random_arrow();
        auto kk = kernel(f);
        auto cc = cokernel(f);
        for (std::size_t m = 0; m < f.source().levels(); ++m)
            for (std::size_t v = 0; v < f.source().quiver(m).vertex_count(); ++v) {
                std::size_t r = rank(f.component(m).at(v));
                if (kk.object.component(m).dim(v) + r != f.source().component(m).dim(v))
                    return "dim Ker + rank != dim source at component " + std::to_string(m + 1) + ", vertex " +
                           f.source().quiver(m).vertices()[v];
                if (cc.object.component(m).dim(v) + r != f.target().component(m).dim(v))
                    return "dim Coker + rank != dim target at component " + std::to_string(m + 1) + ", vertex " +
                           f.source().quiver(m).vertices()[v];
            }
        return std::nullopt;
    }
    }
    return "unknown law";
}

template <class F>
Verdict run_law_in(const F& k, Law law, const TrialConfig& cfg) {
    Verdict v{law_name(law), cfg.trials, cfg.seed, {}};
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        std::uint64_t s = trial_seed(cfg.seed ^ static_cast<std::uint64_t>(law) << 48, i);
        Trial<F> t(k, cfg, s);
        std::optional<std::string> msg;
        try {
            msg = check_law(law, t, s);
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        if (msg) v.failures.push_back({i, s, *msg, emit(t.witness)});
    }
    return v;
}

} // namespace detail

/// Runs `cfg.trials` independent randomized trials of one law. Trial i uses
/// a seed derived from (cfg.seed, law, i), so any failure replays alone.
inline Verdict run_law(Law law, const TrialConfig& cfg) {
    cfg.validate();
    if (cfg.field.kind == FieldSpec::Kind::rationals) return detail::run_law_in(Rationals(), law, cfg);
    return detail::run_law_in(PrimeField(cfg.field.p), law, cfg);
}

} // namespace qrep
