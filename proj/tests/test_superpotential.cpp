#include <gtest/gtest.h>

#include "qpot/superpotential.hpp"

using namespace qpot;

namespace {

Point3 pt(long a, long b, long c) { return {Scalar(a), Scalar(b), Scalar(c)}; }

} // namespace

TEST(Superpotential, CyclicTermsOnly) {
    const PolystableData d{{pt(0, 0, 0), pt(1, 2, 3)}, {1, 2}};
    const Superpotential w = extract_superpotential(d);
    EXPECT_EQ(w.terms.size(), 12u);
    for (const auto& [word, c] : w.terms) {
        EXPECT_EQ(word.loops.size(), 3u);
        auto l = word.loops;
        std::sort(l.begin(), l.end());
        EXPECT_EQ(l, (std::vector<std::size_t>{0, 1, 2}));
    }
    for (std::size_t v = 0; v < 2; ++v) {
        const Scalar abc = w.coefficient({v, {0, 1, 2}});
        EXPECT_FALSE(abc.is_zero());
        EXPECT_EQ(w.coefficient({v, {1, 2, 0}}), abc);
        EXPECT_EQ(w.coefficient({v, {2, 0, 1}}), abc);
        EXPECT_EQ(w.coefficient({v, {0, 2, 1}}), -abc);
        EXPECT_EQ(abc, w.j[v] * Scalar::rational(1, 3));
        EXPECT_EQ(w.j[v] + w.l[v], Scalar(0));
    }
    EXPECT_EQ(w.j[0], w.j[1]);
    EXPECT_EQ(w.coefficient({0, {0, 0, 1}}), Scalar(0));
}

TEST(TraceIdentity, Examples) {
    const auto one = verify_trace_identity({{pt(0, 0, 0)}, {1}}, 20, 1);
    EXPECT_TRUE(one.identity_ok());

    const auto two = verify_trace_identity({{pt(1, 1, 1)}, {2}}, 100, 2);
    EXPECT_TRUE(two.identity_ok());
    EXPECT_EQ(two.mismatches, 0u);
    EXPECT_FALSE(two.j.is_zero());

    const auto mixed = verify_trace_identity({{pt(0, 0, 0), pt(0, 1, 0)}, {1, 2}}, 50, 3);
    EXPECT_TRUE(mixed.identity_ok());
    EXPECT_TRUE(mixed.j_consistent);
    EXPECT_THROW(verify_trace_identity({{pt(0, 0, 0)}, {1}}, 0, 1), InputError);
}

TEST(TraceIdentity, WrongScalarDetected) {
    const PolystableData d{{pt(0, 0, 0)}, {2}};
    Superpotential w = extract_superpotential(d);
    w.j[0] = w.j[0] * Scalar(2);
    EXPECT_FALSE(verify_trace_identity(d, w, 10, 4).identity_ok());
}

TEST(SanityJPlusL, Examples) {
    EXPECT_TRUE(sanity_j_plus_l(PolystableData{{pt(0, 0, 0)}, {1}}));
    EXPECT_TRUE(sanity_j_plus_l(PolystableData{{{Scalar::rational(1, 3), Scalar::rational(-2, 7), Scalar(5)}}, {2}}));

    ExtAlgebra alg = build_ext_algebra(koszul(pt(0, 0, 0)));
    EXPECT_TRUE(sanity_j_plus_l(alg));
    // corrupt m2(x, z) so that l no longer cancels j
    alg.table.at({1, 1})[0][2] = Vec{Scalar(0), Scalar(0), Scalar(0)};
    EXPECT_FALSE(sanity_j_plus_l(alg));
}

TEST(NCWord, Naming) {
    EXPECT_EQ((NCWord{1, {0, 1, 2}}).to_string(), "A2B2C2");
}
