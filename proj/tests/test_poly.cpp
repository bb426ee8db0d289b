#include <gtest/gtest.h>

#include "qpot/poly.hpp"
#include "qpot/random.hpp"

using namespace qpot;

namespace {
Poly x() { return Poly::variable(0); }
Poly y() { return Poly::variable(1); }
Poly z() { return Poly::variable(2); }
} // namespace

TEST(Poly, RingAxiomsOnSamples) {
    const Poly a = x() * y() - Poly(3) * z(), b = x() + Poly(2), c = y() * y() - x();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
}

TEST(Poly, CancellationLeavesNoZeroTerms) {
    const Poly p = (x() + y()) * (x() - y()) - x() * x() + y() * y();
    EXPECT_TRUE(p.is_zero());
    EXPECT_TRUE(p.terms().empty());
}

TEST(Poly, DerivativeAndEvaluate) {
    const Poly p = x() * x() * y() + Poly(5) * z();
    EXPECT_EQ(p.derivative(0), Poly(2) * x() * y());
    EXPECT_EQ(p.derivative(2), Poly(5));
    EXPECT_TRUE(p.derivative(7).is_zero());
    EXPECT_EQ(p.evaluate({Scalar(2), Scalar(3), Scalar(-1)}), Scalar(7));
}

TEST(Poly, ConstantsAndDegree) {
    EXPECT_TRUE(Poly(4).is_constant());
    EXPECT_TRUE(Poly().is_constant());
    EXPECT_FALSE(x().is_constant());
    EXPECT_EQ((x() * y() * z() + x()).total_degree(), 3u);
    EXPECT_EQ((x() + Poly(7)).constant_term(), Scalar(7));
    EXPECT_EQ(Poly(Scalar::imag_unit()) * Poly(Scalar::imag_unit()), Poly(-1));
}

TEST(Poly, ProductEvaluatesAsProduct) {
    Rng rng(41);
    const Poly a = x() * x() - y() * z() + Poly(2), b = x() * y() + z() - Poly(1);
    for (int t = 0; t < 20; ++t) {
        const std::vector<Scalar> pt{rng.gaussian_integer(4), rng.gaussian_integer(4), rng.gaussian_integer(4)};
        EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
    }
}

TEST(Poly, ToString) {
    EXPECT_EQ(Poly().to_string(), "0");
    EXPECT_EQ(Poly(3).to_string(), "3");
    EXPECT_NE((x() - y()).to_string({"x", "y"}).find('x'), std::string::npos);
}
