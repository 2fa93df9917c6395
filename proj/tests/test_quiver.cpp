#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qrep/axioms.hpp"
#include "qrep/quiver.hpp"

using namespace qrep;

namespace {

errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an error";
    return errc::syntax_error;
}

bool arrows_go_forward(const Quiver& q, const std::vector<std::string>& order) {
    for (const auto& a : q.arrows()) {
        auto s = std::find(order.begin(), order.end(), a.source);
        auto t = std::find(order.begin(), order.end(), a.target);
        if (s >= t) return false;
    }
    return true;
}

} // namespace

TEST(Quiver, RejectsMalformedInput) {
    EXPECT_EQ(code_of([] { Quiver({"1", "1"}, {}); }), errc::duplicate_id);
    EXPECT_EQ(code_of([] { Quiver({"1", "2"}, {{"a", "1", "2"}, {"a", "2", "1"}}); }), errc::duplicate_id);
    EXPECT_EQ(code_of([] { Quiver({"1"}, {{"a", "1", "9"}}); }), errc::dangling_endpoint);
}

TEST(Quiver, ParallelArrowsAllowed) {
    Quiver q({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}});
    EXPECT_EQ(q.arrow_count(), 2u);
    EXPECT_TRUE(validate(q).standard());
}

TEST(Validate, Examples) {
    auto single = validate(Quiver({"v"}, {}));
    EXPECT_TRUE(single.finite && single.connected && single.acyclic);

    auto q = validate(fixtures::quiver_q());
    EXPECT_TRUE(q.finite && q.connected && q.acyclic);

    auto cycle = validate(Quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}));
    EXPECT_FALSE(cycle.acyclic);
    EXPECT_TRUE(cycle.connected);

    auto loop = validate(Quiver({"1"}, {{"l", "1", "1"}}));
    EXPECT_FALSE(loop.acyclic);

    auto split = validate(Quiver({"1", "2", "3"}, {{"a", "1", "2"}}));
    EXPECT_FALSE(split.connected);
    EXPECT_TRUE(split.acyclic);
}

TEST(ArrowPairs, CartesianProductInDeclarationOrder) {
    Quiver none({"1"}, {});
    EXPECT_TRUE(arrow_pairs(none, fixtures::quiver_qp()).empty());
    EXPECT_EQ(arrow_pairs(fixtures::quiver_q(), fixtures::quiver_qp()).size(), 3u);

    Quiver two({"1", "2"}, {{"x", "1", "2"}, {"y", "1", "2"}});
    auto pairs = arrow_pairs(two, two);
    std::vector<std::pair<std::size_t, std::size_t>> expected{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    EXPECT_EQ(pairs, expected);
}

TEST(TopoOrder, Examples) {
    EXPECT_EQ(topo_order(fixtures::quiver_q()), (std::vector<std::string>{"1", "2"}));
    EXPECT_EQ(topo_order(Quiver({"v"}, {})), (std::vector<std::string>{"v"}));
    auto star = topo_order(fixtures::quiver_qp());
    EXPECT_TRUE(arrows_go_forward(fixtures::quiver_qp(), star));
    EXPECT_EQ(star, (std::vector<std::string>{"1", "2", "4", "3"}));
}

TEST(TopoOrder, CycleRejected) {
    Quiver cycle({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}});
    EXPECT_EQ(code_of([&] { topo_order(cycle); }), errc::cyclic_quiver);
}

TEST(TopoOrder, RandomQuiversArePermutationsWithForwardArrows) {
    TrialConfig cfg;
    cfg.max_vertices = 7;
    cfg.max_arrows = 9;
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        auto q = random_quiver(cfg, rng);
        auto report = validate(q);
        ASSERT_TRUE(report.connected && report.acyclic);
        auto order = topo_order(q);
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        auto vs = q.vertices();
        std::sort(vs.begin(), vs.end());
        EXPECT_EQ(sorted, vs);
        EXPECT_TRUE(arrows_go_forward(q, order));
        EXPECT_EQ(arrow_pairs(q, q).size(), q.arrow_count() * q.arrow_count());
    }
}
