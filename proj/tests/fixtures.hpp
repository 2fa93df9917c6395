#pragma once

// Worked examples: the two-vertex quiver Q (1 -> 2), the star quiver Qp
// (1 -> 3 <- 2, 4 -> 3), and the birepresentations built on (Q, Qp).

#include <vector>

#include "qrep/nrep.hpp"

namespace qrep::fixtures {

inline Quiver quiver_q() { return Quiver({"1", "2"}, {{"a", "1", "2"}}); }

inline Quiver quiver_qp() {
    return Quiver({"1", "2", "3", "4"}, {{"b1", "1", "3"}, {"b2", "2", "3"}, {"b4", "4", "3"}});
}

inline std::vector<Quiver> pair() { return {quiver_q(), quiver_qp()}; }

template <class F>
Matrix<F> mat(const F& k, std::initializer_list<std::initializer_list<long>> rows) {
    return Matrix<F>::from_ints(k, rows);
}

/// k^1, k^1 -> k^2 <- k^1 with columns e1, e2 and e1 + e2.
template <class F>
Rep<F> star_v(const F& k) {
    return Rep<F>(quiver_qp(), k, {1, 1, 2, 1}, {mat(k, {{1}, {0}}), mat(k, {{0}, {1}}), mat(k, {{1}, {1}})});
}

/// Every vertex k, every arrow the identity.
template <class F>
Rep<F> star_w(const F& k) {
    return Rep<F>(quiver_qp(), k, {1, 1, 1, 1}, {mat(k, {{1}}), mat(k, {{1}}), mat(k, {{1}})});
}

template <class F>
Rep<F> line(const F& k, long value) {
    return Rep<F>(quiver_q(), k, {1, 1}, {mat(k, {{value}})});
}

/// Connectors from vertex 2 of Q into vertices 1, 2, 4 of Qp.
template <class F>
NRep<F> birep(const Rep<F>& first, const Rep<F>& second, long to1, long to2, long to4) {
    const F& k = first.field();
    return NRep<F>({first, second}, {{mat(k, {{to1}}), mat(k, {{to2}}), mat(k, {{to4}})}});
}

template <class F>
NRep<F> vbar(const F& k) { return birep(line(k, 1), star_v(k), 1, 1, 1); }

template <class F>
NRep<F> wbar(const F& k) { return birep(line(k, 0), star_w(k), 0, 0, 1); }

template <class F>
NRep<F> mbar(const F& k) { return birep(line(k, 1), star_v(k), 1, 1, 1); }

template <class F>
NRep<F> nbar(const F& k) { return birep(line(k, 1), star_v(k), 0, 0, 1); }

} // namespace qrep::fixtures
