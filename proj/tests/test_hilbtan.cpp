#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qpot/hilbtan.hpp"
#include "qpot/stability.hpp"

using namespace qpot;

namespace {

MonomialIdeal ideal(std::vector<Exp3> st) { return MonomialIdeal(std::move(st)); }
MonomialIdeal max_squared() { return ideal({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

} // namespace

TEST(MonomialIdeal, Validation) {
    EXPECT_THROW(ideal({}), InputError);
    EXPECT_THROW(ideal({{0, 0, 0}, {2, 0, 0}}), InputError);
    EXPECT_EQ(ideal({{1, 0, 0}, {0, 0, 0}, {1, 0, 0}}).n(), 2u);
}

TEST(MonomialIdeal, MinimalGenerators) {
    EXPECT_EQ(ideal({{0, 0, 0}}).generators_string(), "(z,y,x)");
    EXPECT_EQ(max_squared().minimal_generators().size(), 6u);
    EXPECT_EQ(ideal({{0, 0, 0}, {1, 0, 0}}).generators_string(), "(z,y,x^2)");
}

TEST(Enumerate, CountsMatchPlanePartitionOracle) {
    const std::vector<std::size_t> expected{1, 3, 6, 13, 24, 48, 86, 160};
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto ideals = enumerate_monomial_ideals(n);
        const auto oracle_set = oracle::plane_partition_staircases(n);
        EXPECT_EQ(ideals.size(), expected[n - 1]);
        EXPECT_EQ(oracle_set.size(), expected[n - 1]);
        std::set<std::vector<Exp3>> mine;
        for (const auto& i : ideals) mine.insert(i.staircase());
        EXPECT_EQ(mine, oracle_set);
    }
    EXPECT_THROW(enumerate_monomial_ideals(0), InputError);
    EXPECT_THROW(enumerate_monomial_ideals(9), InputError);
}

TEST(Enumerate, Deterministic) {
    const auto a = enumerate_monomial_ideals(5), b = enumerate_monomial_ideals(5);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Presentation, SyzygiesAnnihilate) {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& i : enumerate_monomial_ideals(n)) {
            const Presentation p = presentation(i);
            EXPECT_TRUE(p.verify());
            EXPECT_EQ(p.relations.size(), p.generators.size() * (p.generators.size() - 1) / 2);
        }
    Presentation broken = presentation(max_squared());
    broken.relations.front().mi[0] += 1;
    EXPECT_FALSE(broken.verify());
}

TEST(IdealToRep, Examples) {
    const FramedRep one = ideal_to_rep(ideal({{0, 0, 0}}));
    EXPECT_TRUE(one.A.is_zero() && one.B.is_zero() && one.C.is_zero());
    EXPECT_EQ(one.V(0, 0), Scalar(1));
    EXPECT_TRUE(quot_point_check(one).is_quot_point());

    const FramedRep two = ideal_to_rep(ideal({{0, 0, 0}, {1, 0, 0}}));
    EXPECT_EQ(two.A, (ScalarMatrix{{0, 0}, {1, 0}}));
    EXPECT_TRUE(two.B.is_zero() && two.C.is_zero());
    EXPECT_TRUE(is_stable(two));

    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& i : enumerate_monomial_ideals(n)) EXPECT_TRUE(quot_point_check(ideal_to_rep(i)).is_quot_point());
}

TEST(HomDim, Examples) {
    EXPECT_EQ(hom_dim(ideal({{0, 0, 0}})), 3u);
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& i : enumerate_monomial_ideals(n)) EXPECT_EQ(hom_dim(i), 3 * n) << i.staircase_string();
    EXPECT_EQ(hom_dim(max_squared()), 18u);
}

TEST(HessianTangent, Examples) {
    EXPECT_EQ(hessian_tangent_dim(ideal({{0, 0, 0}})), 3u);
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& i : enumerate_monomial_ideals(n)) EXPECT_EQ(hessian_tangent_dim(i), 3 * n);
    const HessianTangent t = hessian_tangent(max_squared());
    EXPECT_EQ(t.tangent, 18u);
    EXPECT_EQ(t.gauge_rank, 16u);
    EXPECT_EQ(t.obstruction, t.tangent);
}

TEST(CompareTangents, UpToFive) {
    const std::vector<std::size_t> counts{1, 3, 6, 13, 24};
    for (std::size_t n = 1; n <= 5; ++n) {
        const TangentReport r = compare_tangents(n);
        EXPECT_EQ(r.ideals.size(), counts[n - 1]);
        EXPECT_TRUE(r.all_equal()) << n;
    }
    const TangentReport r4 = compare_tangents(4);
    bool saw18 = false;
    for (const auto& c : r4.ideals)
        if (c.generators == "(z^2,yz,y^2,xz,xy,x^2)") {
            saw18 = true;
            EXPECT_EQ(c.hom_dim, 18u);
        }
    EXPECT_TRUE(saw18);
    EXPECT_THROW(compare_tangents(7), InputError);
}
