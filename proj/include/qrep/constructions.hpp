#pragma once

#include <array>
#include <cstddef>
#include <type_traits>
#include <vector>

#include "qrep/linalg.hpp"

namespace qrep {

template <class Obj, class Mor>
struct Kernel {
    Obj object;
    Mor inclusion;
};

template <class Obj, class Mor>
struct Cokernel {
    Obj object;
    Mor projection;
};

/// Biproduct: p[i] * in[j] = delta_ij and in[0] p[0] + in[1] p[1] = id.
template <class Obj, class Mor>
struct DirectSum {
    Obj sum;
    std::array<Mor, 2> injections;
    std::array<Mor, 2> projections;
};

/// K --k--> X --iota--> I --j--> Y --c--> C for a morphism f : X -> Y.
template <class Obj, class Mor>
struct CanonicalDecomposition {
    Obj K;
    Mor k;
    Obj I;
    Mor iota;
    Mor j;
    Obj C;
    Mor c;

    bool ji_eq_f = false;           ///< j iota = f
    bool kernel_cokernel = false;   ///< (K,k) = Ker f and (C,c) = Coker f
    bool image_coker_ker = false;   ///< (I,iota) = Coker k and (I,j) = Ker c
    bool image_rank = false;        ///< dim I_v = rank f_v at every vertex

    bool verified() const { return ji_eq_f && kernel_cokernel && image_coker_ker && image_rank; }
};

} // namespace qrep

namespace qrep::detail {

// Vertex-wise characterisations. Given that k and c are already validated
// morphisms, these are exactly the kernel / cokernel conditions.

template <class F>
bool is_kernel_of(const std::vector<Matrix<F>>& f, const std::vector<Matrix<F>>& k) {
    if (f.size() != k.size()) return false;
    for (std::size_t v = 0; v < f.size(); ++v) {
        if (!(f[v] * k[v]).is_zero()) return false;
        if (rank(k[v]) != k[v].cols()) return false;
        if (k[v].cols() != f[v].cols() - rank(f[v])) return false;
    }
    return true;
}

template <class F>
bool is_cokernel_of(const std::vector<Matrix<F>>& f, const std::vector<Matrix<F>>& c) {
    if (f.size() != c.size()) return false;
    for (std::size_t v = 0; v < f.size(); ++v) {
        if (!(c[v] * f[v]).is_zero()) return false;
        if (rank(c[v]) != c[v].rows()) return false;
        if (c[v].rows() != f[v].rows() - rank(f[v])) return false;
    }
    return true;
}

/// Shared by single representations and n-representations; relies on the
/// kernel/cokernel/compose overloads and Mor::from_flat.
template <class Mor>
auto canonical_decomposition_impl(const Mor& f) {
    using Obj = std::decay_t<decltype(f.source())>;
    using F = typename Obj::field_type;

    auto ker = kernel(f);
    auto img = cokernel(ker.inclusion);
    auto coker = cokernel(f);

    const auto fv = f.flat();
    const auto iv = img.projection.flat();
    std::vector<Matrix<F>> jv;
    for (std::size_t v = 0; v < fv.size(); ++v)
        jv.push_back(solve_through(iv[v].transpose(), fv[v].transpose()).transpose());
    Mor j = Mor::from_flat(img.object, f.target(), jv);

    CanonicalDecomposition<Obj, Mor> d{ker.object, ker.inclusion, img.object, img.projection,
                                       j, coker.object, coker.projection};
    d.ji_eq_f = compose(d.j, d.iota) == f;
    d.kernel_cokernel = is_kernel_of(fv, d.k.flat()) && is_cokernel_of(fv, d.c.flat());
    d.image_coker_ker = is_cokernel_of(d.k.flat(), iv) && is_kernel_of(d.c.flat(), d.j.flat());
    d.image_rank = true;
    for (std::size_t v = 0; v < fv.size(); ++v)
        if (iv[v].rows() != rank(fv[v])) d.image_rank = false;
    return d;
}

} // namespace qrep::detail
