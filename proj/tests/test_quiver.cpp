#include <gtest/gtest.h>

#include "qpot/quiver.hpp"
#include "qpot/random.hpp"

using namespace qpot;

namespace {
Point3 pt(long a, long b, long c) { return {Scalar(a), Scalar(b), Scalar(c)}; }
} // namespace

TEST(Quiver, RejectsBadEdges) {
    EXPECT_THROW(Quiver(1, {{0, 1, "a"}}), InputError);
    EXPECT_THROW(Quiver(2, {{0, 1, "a"}, {1, 1, "a"}}), InputError);
}

TEST(Framed3Loop, Counts) {
    const Quiver q1 = framed_3loop(1);
    EXPECT_EQ(q1.vertex_count(), 2u);
    EXPECT_EQ(q1.edges().size(), 4u);
    EXPECT_EQ(framed_3loop(3).edges().size(), 6u);
    EXPECT_EQ(q1.loops_at(1), 3u);
    EXPECT_EQ(q1.edges_between(0, 1), 1u);
    for (const auto& e : q1.edges())
        if (e.label == "A" || e.label == "B" || e.label == "C") {
            EXPECT_EQ(e.source, 1u);
            EXPECT_EQ(e.target, 1u);
        }
    EXPECT_THROW(framed_3loop(0), InputError);
}

TEST(ExtQuiver, DisjointLoops) {
    const Quiver one = ext_quiver({{pt(0, 0, 0)}, {2}});
    EXPECT_EQ(one.vertex_count(), 1u);
    EXPECT_EQ(one.loops_at(0), 3u);

    const PolystableData three{{pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0)}, {1, 2, 1}};
    const Quiver q = ext_quiver(three);
    EXPECT_EQ(q.edges().size(), 9u);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) {
                EXPECT_EQ(q.edges_between(i, j), 0u);
            }
    EXPECT_EQ(q.edges().front().label, "e_{1,1}");

    EXPECT_THROW(ext_quiver({{pt(1, 1, 1), pt(1, 1, 1)}, {1, 1}}), InputError);
    EXPECT_THROW(ext_quiver({{pt(1, 1, 1)}, {0}}), InputError);
    EXPECT_THROW(ext_quiver({{pt(1, 1, 1)}, {1, 2}}), InputError);
}

TEST(Pairing, Examples) {
    const std::vector<long> a{2, 1, 3};
    const StabilityParam theta = framed_theta(a);
    EXPECT_EQ(pairing({1, 2, 1, 3}, theta), 0);
    EXPECT_EQ(pairing({1, 2, 0, 3}, theta), 1);
    EXPECT_EQ(pairing({1, 0, 1, 3}, theta), 2);
    EXPECT_EQ(pairing({0, 0, 0, 0}, theta), 0);
    EXPECT_THROW(pairing({1, 2}, theta), InputError);
}

TEST(Pairing, Bilinear) {
    Rng rng(2);
    for (int t = 0; t < 30; ++t) {
        DimVector d1(4), d2(4);
        StabilityParam th(4);
        for (std::size_t i = 0; i < 4; ++i) {
            d1[i] = rng.integer(0, 5);
            d2[i] = rng.integer(0, 5);
            th[i] = mpq_class(rng.integer(-4, 4), rng.integer(1, 4));
        }
        DimVector sum(4);
        for (std::size_t i = 0; i < 4; ++i) sum[i] = d1[i] + d2[i];
        EXPECT_EQ(pairing(sum, th), pairing(d1, th) + pairing(d2, th));
        StabilityParam th2 = th;
        for (auto& v : th2) v *= 3;
        EXPECT_EQ(pairing(d1, th2), 3 * pairing(d1, th));
    }
}

TEST(SubvectorScan, Examples) {
    const auto r11 = destabilizing_subvector_scan({1, 1});
    EXPECT_EQ(r11.subvectors_scanned, 8u);
    EXPECT_TRUE(r11.confirmed());

    const auto r2 = destabilizing_subvector_scan({2});
    EXPECT_EQ(r2.theta, (StabilityParam{2, -1}));
    bool found = false;
    for (const auto& e : r2.single_block_drops)
        if (e.d == DimVector{1, 1}) {
            found = true;
            EXPECT_EQ(e.pairing, 1);
        }
    EXPECT_TRUE(found);
    EXPECT_TRUE(r2.full_vector_slope_zero);
    EXPECT_THROW(destabilizing_subvector_scan({}), InputError);
    EXPECT_THROW(destabilizing_subvector_scan({1, 0}), InputError);
}

TEST(SubvectorScan, NoCounterexampleUpToSix) {
    // every composition of 1..6
    std::vector<std::vector<long>> todo{{}};
    std::size_t checked = 0;
    while (!todo.empty()) {
        auto a = todo.back();
        todo.pop_back();
        long s = 0;
        for (auto x : a) s += x;
        if (!a.empty()) {
            EXPECT_TRUE(destabilizing_subvector_scan(a).confirmed());
            ++checked;
        }
        for (long next = 1; s + next <= 6; ++next) {
            auto b = a;
            b.push_back(next);
            todo.push_back(b);
        }
    }
    EXPECT_EQ(checked, 63u); // 2^6 - 1 compositions of 1..6
}
