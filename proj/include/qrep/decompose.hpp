#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "qrep/error.hpp"
#include "qrep/field.hpp"
#include "qrep/linalg.hpp"
#include "qrep/nrep.hpp"
#include "qrep/rep.hpp"

namespace qrep {

enum class IndecStatus { indecomposable, decomposable, unknown };

inline const char* to_string(IndecStatus s) {
    switch (s) {
    case IndecStatus::indecomposable: return "Indecomposable";
    case IndecStatus::decomposable: return "Decomposable";
    case IndecStatus::unknown: return "Unknown";
    }
    return "?";
}

struct IndecOptions {
    /// Upper bound on the number of endomorphisms examined.
    std::uint64_t budget = 4096;
    std::uint64_t seed = 0;
};

template <class Obj, class Mor>
struct IndecResult {
    IndecStatus status = IndecStatus::unknown;
    std::string certificate;
    std::size_t end_dim = 0;
    std::uint64_t examined = 0;
    std::optional<Mor> idempotent;
    /// ker(e) and im(e), realised as kernels of e and id - e.
    std::vector<Obj> summands;

    // Witness checks, only meaningful when decomposable.
    bool idempotent_law = false;
    bool proper = false;
    bool dims_add_up = false;

    bool witness_verified() const { return idempotent_law && proper && dims_add_up; }
};

namespace detail {

template <class F>
using Flat = std::vector<Matrix<F>>;

template <class F>
Flat<F> flat_combination(const F& k, const std::vector<Flat<F>>& basis, const std::vector<typename F::value_type>& c,
                         const Flat<F>& shape) {
    Flat<F> out;
    for (const auto& m : shape) out.emplace_back(k, m.rows(), m.cols());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (k.is_zero(c[i])) continue;
        for (std::size_t v = 0; v < out.size(); ++v) out[v] = out[v] + basis[i][v].scaled(c[i]);
    }
    return out;
}

template <class F>
bool is_nontrivial_idempotent(const Flat<F>& e) {
    bool zero = true, ident = true;
    for (const auto& m : e) {
        if (!(m * m == m)) return false;
        zero = zero && m.is_zero();
        ident = ident && m.is_identity();
    }
    return !zero && !ident;
}

/// Coefficients of det(x I - m), lowest degree first, by interpolation at
/// x = 0..n.
template <class F>
std::vector<typename F::value_type> charpoly(const Matrix<F>& m) {
    const F& k = m.field();
    std::size_t n = m.rows();
    std::vector<typename F::value_type> xs, ys;
    for (std::size_t i = 0; i <= n; ++i) {
        auto x = k.from_integer(static_cast<long>(i));
        auto shifted = Matrix<F>::identity(k, n).scaled(x) - m;
        xs.push_back(x);
        ys.push_back(determinant(shifted));
    }
    // Newton divided differences, then expand into monomial coefficients.
    auto dd = ys;
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = n; i >= j; --i) {
            dd[i] = k.mul(k.sub(dd[i], dd[i - 1]), k.inv(k.sub(xs[i], xs[i - j])));
            if (i == j) break;
        }
    std::vector<typename F::value_type> poly{dd[n]};
    for (std::size_t i = n; i-- > 0;) {
        std::vector<typename F::value_type> next(poly.size() + 1, k.zero());
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d + 1] = k.add(next[d + 1], poly[d]);
            next[d] = k.sub(next[d], k.mul(xs[i], poly[d]));
        }
        next[0] = k.add(next[0], dd[i]);
        poly = std::move(next);
    }
    return poly;
}

inline std::vector<integer> divisors(integer n, const integer& cap) {
    if (n < 0) n = -n;
    std::vector<integer> out;
    if (n == 0 || n > cap) return out;
    for (integer d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    return out;
}

/// Candidate eigenvalues of the vertex maps. Over Q these are the rational
/// roots allowed by the rational root theorem (skipped when the constant or
/// leading coefficient exceeds a size cap); over GF(p) every element when p
/// is small, otherwise only 0, 1 and the diagonal entries.
inline std::vector<rational> eigen_candidates(const Rationals& k, const Flat<Rationals>& f) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const integer cap = 1000000;
    std::set<rational> cands{k.zero(), k.one()};
    for (const auto& m : f) {
        if (m.rows() == 0) continue;
        auto poly = charpoly(m);
        integer lcm = 1;
        for (const auto& c : poly) {
            integer d = denominator(c);
            lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
        }
        std::vector<integer> ip;
        for (const auto& c : poly) ip.push_back(numerator(rational(c * lcm)));
        std::size_t low = 0;
        while (low < ip.size() && ip[low] == 0) ++low;
        if (low > 0) cands.insert(k.zero());
        if (low + 1 >= ip.size()) continue;
        for (const auto& a : divisors(ip[low], cap))
            for (const auto& b : divisors(ip.back(), cap)) {
                cands.insert(rational(a, b));
                cands.insert(rational(-a, b));
            }
    }
    return {cands.begin(), cands.end()};
}

inline std::vector<std::uint32_t> eigen_candidates(const PrimeField& k, const Flat<PrimeField>& f) {
    std::set<std::uint32_t> cands{0, 1};
    if (k.characteristic() <= (1u << 12)) {
        for (std::uint32_t c = 0; c < k.characteristic(); ++c) cands.insert(c);
    } else {
        for (const auto& m : f)
            for (std::size_t i = 0; i < m.rows(); ++i) cands.insert(m(i, i));
    }
    return {cands.begin(), cands.end()};
}

template <class F>
Matrix<F> matrix_power(Matrix<F> m, std::size_t e) {
    auto r = Matrix<F>::identity(m.field(), m.rows());
    while (e) {
        if (e & 1) r = r * m;
        m = m * m;
        e >>= 1;
    }
    return r;
}

/// If (f - c)^N splits the object properly, the projection onto im along ker.
template <class F>
std::optional<Flat<F>> fitting_idempotent(const F& k, const Flat<F>& f, const typename F::value_type& c,
                                          std::size_t total) {
    Flat<F> kers, ims;
    std::size_t image_rank = 0;
    bool singular_somewhere = false;
    for (const auto& m : f) {
        auto shifted = m - Matrix<F>::identity(k, m.rows()).scaled(c);
        if (rank(shifted) < m.rows()) singular_somewhere = true;
        auto h = matrix_power(shifted, total);
        kers.push_back(nullspace_basis(h));
        ims.push_back(colspace_basis(h));
        image_rank += ims.back().cols();
    }
    if (!singular_somewhere || image_rank == 0 || image_rank == total) return std::nullopt;
    Flat<F> e;
    for (std::size_t v = 0; v < f.size(); ++v) {
        auto basis = hstack(kers[v], ims[v]);
        Matrix<F> diag(k, basis.cols(), basis.cols());
        for (std::size_t i = kers[v].cols(); i < basis.cols(); ++i) diag(i, i) = k.one();
        e.push_back(basis * diag * inverse(basis));
    }
    return e;
}

} // namespace detail

/// Tri-state indecomposability test over End(x) = hom_basis(x, x). Works for
/// both Rep and NRep.
template <class Obj>
auto indec_status(const Obj& x, const IndecOptions& opt = {}) {
    using F = typename Obj::field_type;
    using Mor = typename decltype(hom_basis(x, x))::value_type;
    using Result = IndecResult<Obj, Mor>;

    if (x.is_zero()) throw error(errc::zero_object, "indecomposability of the zero object is undefined");
    const F& k = x.field();
    const std::size_t total = x.total_dim();

    Result res;
    auto basis = hom_basis(x, x);
    res.end_dim = basis.size();
    if (res.end_dim == 1) {
        res.status = IndecStatus::indecomposable;
        res.certificate = "End is one-dimensional, spanned by the identity";
        return res;
    }

    const auto id = Mor::identity(x);
    const auto shape = id.flat();
    std::vector<detail::Flat<F>> flats;
    for (const auto& b : basis) flats.push_back(b.flat());

    auto accept = [&](const detail::Flat<F>& e) {
        Mor em = Mor::from_flat(x, x, e);
        res.status = IndecStatus::decomposable;
        res.idempotent_law = compose(em, em) == em;
        res.proper = !em.is_zero() && !(em == id);
        auto lower = kernel(em).object;
        auto upper = kernel(subtract(id, em)).object;
        auto lo = Mor::identity(lower).flat();
        auto up = Mor::identity(upper).flat();
        res.dims_add_up = !lower.is_zero() && !upper.is_zero();
        for (std::size_t v = 0; v < shape.size(); ++v)
            if (lo[v].rows() + up[v].rows() != shape[v].rows()) res.dims_add_up = false;
        res.summands = {lower, upper};
        res.idempotent = em;
    };

    if constexpr (std::is_same_v<F, PrimeField>) {
        const std::uint64_t p = k.characteristic();
        std::uint64_t space = 1;
        bool small = true;
        for (std::size_t i = 0; i < basis.size() && small; ++i) {
            space *= p;
            small = space <= opt.budget;
        }
        if (small) {
            std::vector<std::uint32_t> c(basis.size(), 0);
            for (std::uint64_t n = 0; n < space; ++n) {
                std::uint64_t r = n;
                for (auto& d : c) {
                    d = static_cast<std::uint32_t>(r % p);
                    r /= p;
                }
                ++res.examined;
                auto e = detail::flat_combination(k, flats, c, shape);
                if (detail::is_nontrivial_idempotent(e)) {
                    res.certificate = "idempotent found by exhaustive search";
                    accept(e);
                    return res;
                }
            }
            res.status = IndecStatus::indecomposable;
            res.certificate = "no nontrivial idempotent among all " + std::to_string(space) + " endomorphisms";
            return res;
        }
    }

    // Fitting: basis elements first, then random combinations.
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> small_coeff(-3, 3);
    for (std::uint64_t trial = 0; trial < opt.budget; ++trial) {
        detail::Flat<F> f;
        if (trial < flats.size()) {
            f = flats[trial];
        } else {
            std::vector<typename F::value_type> c;
            for (std::size_t i = 0; i < flats.size(); ++i) c.push_back(k.from_integer(small_coeff(rng)));
            f = detail::flat_combination(k, flats, c, shape);
        }
        ++res.examined;
        for (const auto& ev : detail::eigen_candidates(k, f)) {
            if (auto e = detail::fitting_idempotent(k, f, ev, total)) {
                res.certificate = "Fitting splitting of (f - " + k.to_string(ev) + ")^" + std::to_string(total);
                accept(*e);
                return res;
            }
        }
    }
    res.status = IndecStatus::unknown;
    res.certificate = "no splitting found within budget " + std::to_string(opt.budget);
    return res;
}

} // namespace qrep
