#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qrep/axioms.hpp"
#include "qrep/rep.hpp"

using namespace qrep;
using fixtures::mat;

namespace {

const Rationals QQ;
const PrimeField GF5(5);
const PrimeField GF7(7);

template <class F>
Rep<F> random_rep_on(const Quiver& q, const F& k, std::mt19937_64& rng, std::size_t max_dim = 3) {
    TrialConfig cfg;
    cfg.max_dim = max_dim;
    return random_rep(q, k, cfg, rng);
}

Quiver random_q(std::mt19937_64& rng) {
    TrialConfig cfg;
    return random_quiver(cfg, rng);
}

} // namespace

TEST(Rep, ShapeChecked) {
    EXPECT_THROW(Rep<Rationals>(fixtures::quiver_q(), QQ, {1, 2}, {mat(QQ, {{1}})}), error);
    EXPECT_THROW(Rep<Rationals>(fixtures::quiver_q(), QQ, {1}, {mat(QQ, {{1}})}), error);
    Rep<Rationals> ok(fixtures::quiver_q(), QQ, {1, 2}, {mat(QQ, {{1}, {0}})});
    EXPECT_EQ(ok.total_dim(), 3u);
}

TEST(MorphismCheck, IdentityAndZero) {
    auto v = fixtures::star_v(QQ);
    EXPECT_NO_THROW(RepMorphism<Rationals>::identity(v));
    EXPECT_NO_THROW(RepMorphism<Rationals>::zero(v, fixtures::star_w(QQ)));
}

TEST(MorphismCheck, StarRelations) {
    // Unknowns a, b, [c d], e at vertices 1, 2, 3, 4 of the star; valid
    // exactly when a = c, b = d and e = c + d.
    auto v = fixtures::star_v(QQ);
    auto w = fixtures::star_w(QQ);
    auto comps = [&](long a, long b, long c, long d, long e) {
        return std::vector<Matrix<Rationals>>{mat(QQ, {{a}}), mat(QQ, {{b}}), mat(QQ, {{c, d}}), mat(QQ, {{e}})};
    };
    EXPECT_TRUE(is_morphism(v, w, comps(2, 3, 2, 3, 5)));
    EXPECT_TRUE(is_morphism(v, w, comps(0, 0, 0, 0, 0)));
    EXPECT_FALSE(is_morphism(v, w, comps(1, 3, 2, 3, 5)));
    try {
        morphism_check(v, w, comps(1, 3, 2, 3, 5));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::non_commuting_square);
        EXPECT_NE(std::string(e.what()).find("b1"), std::string::npos);
    }
}

TEST(MorphismCheck, WrongShapeRejected) {
    auto v = fixtures::star_v(QQ);
    std::vector<Matrix<Rationals>> comps{mat(QQ, {{1}}), mat(QQ, {{1}}), mat(QQ, {{1}}), mat(QQ, {{1}})};
    try {
        morphism_check(v, fixtures::star_w(QQ), comps);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::shape_mismatch);
    }
}

TEST(HomBasis, Examples) {
    EXPECT_EQ(hom_basis(fixtures::star_v(QQ), fixtures::star_w(QQ)).size(), 2u);
    EXPECT_EQ(hom_basis(fixtures::line(QQ, 1), fixtures::line(QQ, 0)).size(), 1u);
    EXPECT_EQ(hom_basis(fixtures::line(QQ, 1), fixtures::line(QQ, 1)).size(), 1u);
    auto zero = Rep<Rationals>::zero(fixtures::quiver_qp(), QQ);
    EXPECT_TRUE(hom_basis(zero, fixtures::star_v(QQ)).empty());
}

TEST(HomBasis, MismatchedQuiversRejected) {
    try {
        hom_basis(fixtures::line(QQ, 1), fixtures::star_v(QQ));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::quiver_mismatch);
    }
}

TEST(HomBasis, ElementsAreIndependentMorphisms) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 30; ++i) {
        auto q = random_q(rng);
        auto a = random_rep_on(q, GF5, rng), b = random_rep_on(q, GF5, rng);
        auto basis = hom_basis(a, b);
        std::size_t unknowns = 0;
        for (std::size_t v = 0; v < q.vertex_count(); ++v) unknowns += a.dim(v) * b.dim(v);
        Matrix<PrimeField> stacked(GF5, unknowns, basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            EXPECT_TRUE(is_morphism(a, b, basis[j].comps()));
            std::size_t r = 0;
            for (const auto& m : basis[j].comps())
                for (std::size_t x = 0; x < m.rows(); ++x)
                    for (std::size_t y = 0; y < m.cols(); ++y) stacked(r++, j) = m(x, y);
        }
        EXPECT_EQ(rank(stacked), basis.size());
    }
}

TEST(DirectSum, StarBlocks) {
    auto ds = direct_sum(fixtures::star_v(QQ), fixtures::star_w(QQ));
    EXPECT_EQ(ds.sum.dims(), (std::vector<std::size_t>{2, 2, 3, 2}));
    EXPECT_EQ(ds.sum.map(0), mat(QQ, {{1, 0}, {0, 0}, {0, 1}}));
}

TEST(DirectSum, WithZero) {
    auto v = fixtures::star_v(QQ);
    auto ds = direct_sum(v, Rep<Rationals>::zero(v.quiver(), QQ));
    EXPECT_EQ(ds.sum, v);
}

TEST(DirectSum, BiproductIdentitiesOverGF5) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 30; ++i) {
        auto q = random_q(rng);
        auto a = random_rep_on(q, GF5, rng), b = random_rep_on(q, GF5, rng);
        auto ds = direct_sum(a, b);
        EXPECT_EQ(compose(ds.projections[0], ds.injections[0]), RepMorphism<PrimeField>::identity(a));
        EXPECT_TRUE(compose(ds.projections[0], ds.injections[1]).is_zero());
        EXPECT_TRUE(compose(ds.projections[1], ds.injections[0]).is_zero());
        EXPECT_EQ(add(compose(ds.injections[0], ds.projections[0]), compose(ds.injections[1], ds.projections[1])),
                  RepMorphism<PrimeField>::identity(ds.sum));
    }
}

TEST(HomBasis, AdditiveOverDirectSums) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        auto q = random_q(rng);
        auto a = random_rep_on(q, GF5, rng, 2), b = random_rep_on(q, GF5, rng, 2), c = random_rep_on(q, GF5, rng, 2);
        auto ab = direct_sum(a, b).sum;
        EXPECT_EQ(hom_basis(ab, c).size(), hom_basis(a, c).size() + hom_basis(b, c).size());
        EXPECT_EQ(hom_basis(c, ab).size(), hom_basis(c, a).size() + hom_basis(c, b).size());
    }
}

TEST(Kernel, IdentityAndZero) {
    auto v = fixtures::star_v(QQ);
    EXPECT_TRUE(kernel(RepMorphism<Rationals>::identity(v)).object.is_zero());
    auto k0 = kernel(RepMorphism<Rationals>::zero(v, fixtures::star_w(QQ)));
    EXPECT_EQ(k0.object.dims(), v.dims());
    EXPECT_TRUE(cokernel(RepMorphism<Rationals>::identity(v)).object.is_zero());
    auto c0 = cokernel(RepMorphism<Rationals>::zero(v, fixtures::star_w(QQ)));
    EXPECT_EQ(c0.object.dims(), fixtures::star_w(QQ).dims());
}

TEST(Kernel, RankNullityAndAnnihilation) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 40; ++i) {
        auto q = random_q(rng);
        auto x = random_rep_on(q, GF5, rng);
        auto s = direct_sum(x, random_rep_on(q, GF5, rng)).sum;
        auto t = direct_sum(x, random_rep_on(q, GF5, rng)).sum;
        auto f = random_morphism(s, t, rng);
        auto k = kernel(f);
        auto c = cokernel(f);
        EXPECT_TRUE(compose(f, k.inclusion).is_zero());
        EXPECT_TRUE(compose(c.projection, f).is_zero());
        for (std::size_t v = 0; v < q.vertex_count(); ++v) {
            EXPECT_EQ(k.object.dim(v) + rank(f.at(v)), s.dim(v));
            EXPECT_EQ(c.object.dim(v) + rank(f.at(v)), t.dim(v));
        }
    }
}

TEST(Kernel, UniversalPropertyOverGF5) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        auto q = random_q(rng);
        auto x = random_rep_on(q, GF5, rng);
        auto s = direct_sum(x, random_rep_on(q, GF5, rng)).sum;
        auto f = random_morphism(s, x, rng);
        auto k = kernel(f);
        auto v = verify_universal(UniversalKind::kernel, f, k.object, k.inclusion, 20, i);
        EXPECT_TRUE(v.passed()) << render(v);
    }
}

TEST(Cokernel, UniversalPropertyOverGF7) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 20; ++i) {
        auto q = random_q(rng);
        auto x = random_rep_on(q, GF7, rng);
        auto t = direct_sum(x, random_rep_on(q, GF7, rng)).sum;
        auto f = random_morphism(x, t, rng);
        auto c = cokernel(f);
        auto v = verify_universal(UniversalKind::cokernel, f, c.object, c.projection, 20, i);
        EXPECT_TRUE(v.passed()) << render(v);
    }
}

TEST(Canonical, IdentityAndZero) {
    auto v = fixtures::star_v(QQ);
    auto d = canonical_decomposition(RepMorphism<Rationals>::identity(v));
    EXPECT_TRUE(d.verified());
    EXPECT_TRUE(d.K.is_zero());
    EXPECT_TRUE(d.C.is_zero());
    EXPECT_EQ(d.I.dims(), v.dims());
    auto z = canonical_decomposition(RepMorphism<Rationals>::zero(v, fixtures::star_w(QQ)));
    EXPECT_TRUE(z.verified());
    EXPECT_TRUE(z.I.is_zero());
}

TEST(Canonical, RandomMorphismsRecompose) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        auto q = random_q(rng);
        auto x = random_rep_on(q, GF5, rng);
        auto s = direct_sum(x, random_rep_on(q, GF5, rng)).sum;
        auto t = direct_sum(x, random_rep_on(q, GF5, rng)).sum;
        auto f = random_morphism(s, t, rng);
        auto d = canonical_decomposition(f);
        EXPECT_TRUE(d.verified());
        EXPECT_EQ(compose(d.j, d.iota), f);
        EXPECT_TRUE(compose(d.c, d.j).is_zero());
        for (std::size_t v = 0; v < q.vertex_count(); ++v) EXPECT_EQ(d.I.dim(v), rank(f.at(v)));
    }
}

TEST(Arithmetic, AbelianGroupAndBiadditivity) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 30; ++i) {
        auto q = random_q(rng);
        auto x = random_rep_on(q, GF5, rng);
        auto y = direct_sum(x, random_rep_on(q, GF5, rng)).sum;
        auto f = random_morphism(x, y, rng), g = random_morphism(x, y, rng), h = random_morphism(y, y, rng);
        EXPECT_EQ(add(f, g), add(g, f));
        EXPECT_TRUE(subtract(f, f).is_zero());
        EXPECT_EQ(add(f, RepMorphism<PrimeField>::zero(x, y)), f);
        EXPECT_EQ(compose(h, add(f, g)), add(compose(h, f), compose(h, g)));
        EXPECT_EQ(compose(f, RepMorphism<PrimeField>::identity(x)), f);
    }
}

TEST(Arithmetic, EndpointMismatch) {
    auto v = fixtures::star_v(QQ), w = fixtures::star_w(QQ);
    auto f = RepMorphism<Rationals>::zero(v, w);
    try {
        compose(f, f);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::endpoint_mismatch);
    }
}
