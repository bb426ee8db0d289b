#include <gtest/gtest.h>

#include "qpot/koszul.hpp"
#include "qpot/random.hpp"

using namespace qpot;

namespace {

Point3 origin() { return {Scalar(0), Scalar(0), Scalar(0)}; }
Point3 pt(long a, long b, long c) { return {Scalar(a), Scalar(b), Scalar(c)}; }

DGElement random_element(Rng& rng, int degree) {
    DGElement e = DGElement::zero(degree);
    for (auto& s : e.slots)
        for (auto& p : s.flat()) {
            p = Poly(rng.real_integer(3));
            for (std::size_t v = 0; v < 3; ++v)
                if (rng.integer(0, 1)) p += Poly(rng.real_integer(2)) * Poly::variable(v);
            if (rng.integer(0, 2) == 0) p += Poly::variable(0) * Poly::variable(2);
        }
    return e;
}

const RelationCheck* find(const ProductTableReport& r, const std::string& name) {
    for (const auto& rel : r.relations)
        if (rel.relation == name) return &rel;
    return nullptr;
}

} // namespace

TEST(Koszul, DisplayedMatricesAtOrigin) {
    const KoszulComplex k = koszul(origin());
    const Poly x = Poly::variable(0), y = Poly::variable(1), z = Poly::variable(2);
    EXPECT_EQ(k.diffs[0], (PolyMatrix{{x}, {y}, {z}}));
    EXPECT_EQ(k.diffs[1], (PolyMatrix{{Poly(), -z, y}, {z, Poly(), -x}, {-y, x, Poly()}}));
    EXPECT_EQ(k.diffs[2], (PolyMatrix{{x, y, z}}));
}

TEST(Koszul, CompositesVanish) {
    for (const auto& p : {origin(), pt(1, 2, 3), pt(-4, 0, 7)}) {
        const KoszulComplex k = koszul(p);
        EXPECT_TRUE((k.diffs[1] * k.diffs[0]).is_zero());
        EXPECT_TRUE((k.diffs[2] * k.diffs[1]).is_zero());
    }
}

TEST(Koszul, DifferentialsVanishAtThePoint) {
    const KoszulComplex k = koszul(pt(1, 2, 3));
    const std::vector<Scalar> p{Scalar(1), Scalar(2), Scalar(3)};
    for (const auto& d : k.diffs)
        for (const auto& e : d.flat()) EXPECT_TRUE(e.evaluate(p).is_zero());
}

TEST(DGElement, SlotShapes) {
    EXPECT_EQ(DGElement::zero(0).slots.size(), 4u);
    EXPECT_EQ(DGElement::zero(1).slots[1].shape(), "3x3");
    EXPECT_EQ(DGElement::zero(2).slots[0].shape(), "3x1");
    EXPECT_EQ(DGElement::zero(2).slots[1].shape(), "1x3");
    EXPECT_EQ(DGElement::zero(3).slots.size(), 1u);
    EXPECT_TRUE(DGElement::zero(4).slots.empty());
    EXPECT_THROW(DGElement::zero(5), InputError);
    EXPECT_THROW(DGElement::from_slots(1, {PolyMatrix(3, 1)}), InputError);
    EXPECT_THROW(DGElement::from_slots(3, {PolyMatrix(2, 1)}), InputError);
}

TEST(DgDifferential, HatsAreCocycles) {
    for (const auto& p : {origin(), pt(1, 2, 3)}) {
        const KoszulComplex k = koszul(p);
        const HatElements h = hat_elements(k);
        for (const auto* e : {&h.one, &h.x, &h.y, &h.z}) EXPECT_TRUE(dg_differential(*e, k).is_zero());
    }
}

TEST(DgDifferential, SquaresToZero) {
    Rng rng(13);
    const KoszulComplex k = koszul(pt(1, -1, 2));
    for (int t = 0; t < 20; ++t) {
        const int deg = static_cast<int>(rng.integer(0, 2));
        const DGElement u = random_element(rng, deg);
        EXPECT_TRUE(dg_differential(dg_differential(u, k), k).is_zero()) << "degree " << deg;
    }
}

TEST(DgDifferential, LeibnizRule) {
    // Leibniz: d(uv) = d(u) v + (-1)^|u| u d(v)
    Rng rng(19);
    const KoszulComplex k = koszul(origin());
    for (int t = 0; t < 15; ++t) {
        const DGElement u = random_element(rng, 1), v = random_element(rng, 1);
        const DGElement lhs = dg_differential(dg_product(u, v), k);
        const DGElement rhs = dg_product(dg_differential(u, k), v) - dg_product(u, dg_differential(v, k));
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(HatElements, DisplayedValues) {
    const HatElements h = hat_elements(koszul(origin()));
    EXPECT_EQ(h.one.slots[1], PolyMatrix::identity(3));
    EXPECT_EQ(h.one.slots[0], (PolyMatrix{{Poly(1)}}));
    EXPECT_EQ(h.x.slots[0], (PolyMatrix{{Poly(1)}, {Poly(0)}, {Poly(0)}}));
    for (const auto* e : {&h.one, &h.x, &h.y, &h.z}) EXPECT_TRUE(e->is_constant());
    // x^ is the Koszul triple evaluated at (1, 0, 0)
    const KoszulComplex k = koszul(origin());
    const std::vector<Scalar> e1{Scalar(1), Scalar(0), Scalar(0)};
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t i = 0; i < k.diffs[s].rows(); ++i)
            for (std::size_t j = 0; j < k.diffs[s].cols(); ++j)
                EXPECT_EQ(Poly(k.diffs[s](i, j).evaluate(e1)), h.x.slots[s](i, j));
}

TEST(DgProduct, Examples) {
    const HatElements h = hat_elements(koszul(origin()));
    EXPECT_EQ(dg_product(h.one, h.x), h.x);
    EXPECT_TRUE(dg_product(h.x, h.x).is_zero());
    EXPECT_THROW(dg_product(dg_product(h.x, h.y), dg_product(h.y, h.z)), InputError);
    // the composite x^ y^ z^ is the constant det(e1, e2, e3) = 1
    const DGElement xyz = dg_product(dg_product(h.x, h.y), h.z);
    EXPECT_EQ(xyz.slots[0](0, 0), Poly(1));
    EXPECT_EQ(dg_product(h.x, dg_product(h.y, h.z)), xyz);
}

TEST(ProductTable, ComputedAgainstDisplayed) {
    for (const auto& p : {origin(), pt(1, 2, 3)}) {
        const ProductTableReport r = verify_product_table(koszul(p));
        EXPECT_EQ(r.relations.size(), 13u);
        // composition of the displayed hats contradicts exactly two displayed entries
        EXPECT_EQ(r.failing(), (std::vector<std::string>{"x*y = ((0,0,1)^T, (1,0,0))", "x*y*z = 2"}));
        EXPECT_TRUE(find(r, "y*z = ((1,0,0)^T, (1,0,0))")->holds);
        EXPECT_TRUE(find(r, "z*x = ((0,1,0)^T, (0,1,0))")->holds);
        EXPECT_TRUE(find(r, "x*y = -y*x")->holds);
        EXPECT_EQ(find(r, "x*y*z = 2")->computed, "([1])");
        EXPECT_EQ(find(r, "x*y = ((0,0,1)^T, (1,0,0))")->computed, "([0; 0; 1], [0 0 1])");
    }
}

TEST(ProductTable, CorruptedHatIsCaught) {
    const KoszulComplex k = koszul(origin());
    HatElements h = hat_elements(k);
    h.y.slots[0](0, 0) = Poly(1);
    const ProductTableReport r = verify_product_table(k, h);
    EXPECT_FALSE(r.all_hold());
    EXPECT_FALSE(find(r, "y*y = 0")->holds);
}

TEST(ExtDims, ExteriorAlgebra) {
    Rng rng(3);
    for (int t = 0; t < 5; ++t) {
        const auto d = ext_dims(koszul({rng.small_rational(5), rng.small_rational(5), rng.gaussian_integer(5)}));
        EXPECT_EQ(d, (std::array<std::size_t, 4>{1, 3, 3, 1}));
        EXPECT_EQ(d[0] + d[1] + d[2] + d[3], 8u);
        EXPECT_EQ(static_cast<long>(d[0]) - static_cast<long>(d[1]) + static_cast<long>(d[2]) - static_cast<long>(d[3]), 0);
    }
}

TEST(M2, Examples) {
    const ExtAlgebra alg = build_ext_algebra(koszul(origin()));
    const ExtClass x = ExtClass::basis(1, 0), y = ExtClass::basis(1, 1), z = ExtClass::basis(1, 2);
    EXPECT_EQ(m2(x, y, alg), ExtClass::basis(2, 2)); // [x^ y^]
    EXPECT_EQ(m2(y, z, alg), ExtClass::basis(2, 0));
    EXPECT_EQ(m2(z, x, alg), ExtClass::basis(2, 1));
    EXPECT_EQ(m2(m2(x, y, alg), z, alg), ExtClass::basis(3, 0));
    EXPECT_THROW(m2(ExtClass::basis(2, 0), ExtClass::basis(2, 1), alg), InputError);
    EXPECT_TRUE(alg.closed);
    EXPECT_EQ(alg.top_ring_constant, Scalar(1));

    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        ExtClass a = ExtClass::zero(1), b = ExtClass::zero(1);
        for (std::size_t i = 0; i < 3; ++i) {
            a.coords[i] = rng.gaussian_integer(3);
            b.coords[i] = rng.gaussian_integer(3);
        }
        EXPECT_EQ(m2(a, a, alg), ExtClass::zero(2));
        EXPECT_EQ(m2(a, b, alg), -m2(b, a, alg));
    }
}

TEST(CyclicPairing, Examples) {
    const ExtAlgebra alg = build_ext_algebra(koszul(pt(2, -1, 5)));
    const ExtClass x = ExtClass::basis(1, 0);
    EXPECT_FALSE(cyclic_pairing(x, ExtClass::basis(2, 0), alg).is_zero()); // (x, yz)
    EXPECT_TRUE(cyclic_pairing(x, ExtClass::basis(2, 2), alg).is_zero());  // (x, xy)
    EXPECT_THROW(cyclic_pairing(x, x, alg), InputError);

    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t c = 0; c < 3; ++c) {
                const ExtClass ea = ExtClass::basis(1, a), eb = ExtClass::basis(1, b), ec = ExtClass::basis(1, c);
                EXPECT_EQ(cyclic_pairing(m2(ea, eb, alg), ec, alg), cyclic_pairing(m2(eb, ec, alg), ea, alg));
            }

    ScalarMatrix gram(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) gram(i, j) = cyclic_pairing(ExtClass::basis(1, i), ExtClass::basis(2, j), alg);
    EXPECT_FALSE(determinant(gram).is_zero());
}

TEST(Massey, Report) {
    for (const auto& p : {origin(), pt(3, 1, -2)}) {
        const MasseyReport r = massey_vanishing_report(koszul(p));
        EXPECT_TRUE(r.closed_under_product);
        EXPECT_TRUE(r.all_cocycles);
        EXPECT_TRUE(r.identity_on_homology);
        EXPECT_TRUE(r.higher_products_vanish());
        EXPECT_EQ(r.class_ranks, (std::array<std::size_t, 4>{1, 3, 3, 1}));
        EXPECT_EQ(r.trace_normalization, Scalar(1));
    }
}

TEST(Massey, CorruptedRepresentativeFailsClosure) {
    const KoszulComplex k = koszul(origin());
    HatElements h = hat_elements(k);
    h.y.slots[1](0, 0) = Poly::variable(0);
    const MasseyReport r = massey_vanishing_report(k, h);
    EXPECT_FALSE(r.closed_under_product);
    EXPECT_FALSE(r.higher_products_vanish());
}
