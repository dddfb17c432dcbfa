#include "amalgam/ring.hpp"

#include <gtest/gtest.h>

#include "amalgam/amalgam_ring.hpp"

using namespace amalgam;

namespace {

std::vector<std::vector<Elem>> rows(const std::vector<Elem>& flat, int n) {
    std::vector<std::vector<Elem>> out(n, std::vector<Elem>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = flat[i * n + j];
    return out;
}

}  // namespace

TEST(Zmod, BasicArithmetic) {
    auto z6 = make_zmod(6);
    EXPECT_EQ(z6->order(), 6);
    EXPECT_EQ(z6->mul(4, 4), 4);  // 16 mod 6
    auto z4 = make_zmod(4);
    EXPECT_EQ(z4->add(2, 2), 0);
    EXPECT_EQ(z4->mul(2, 2), 0);
}

TEST(Zmod, OrderOneRingHasZeroEqualOne) {
    auto z1 = make_zmod(1);
    EXPECT_EQ(z1->order(), 1);
    EXPECT_EQ(z1->zero(), z1->one());
    EXPECT_TRUE(validate_ring(z1).empty());
}

TEST(Zmod, RejectsZero) { EXPECT_THROW(make_zmod(0), InvalidParameter); }

TEST(Product, ComponentwiseIdentity) {
    auto p = make_product(make_zmod(2), make_zmod(3));
    EXPECT_EQ(p.ring->order(), 6);
    // (1,1) is coded 1*3+1 = 4 and is the multiplicative identity.
    EXPECT_EQ(p.ring->one(), 4);
    EXPECT_EQ(p.ring->mul(4, 4), 4);
}

TEST(Product, IdempotentsOfZ2xZ2) {
    auto p = make_product(make_zmod(2), make_zmod(2));
    EXPECT_EQ(idempotents(p.ring), (std::vector<Elem>{0, 1, 2, 3}));
}

TEST(Product, CrtInstanceIsomorphicToZ36) {
    auto p = make_product(make_zmod(4), make_zmod(9));
    EXPECT_EQ(p.ring->order(), 36);
    EXPECT_TRUE(ring_isomorphic(p.ring, make_zmod(36)).has_value());
}

TEST(Product, ProjectionsAreSurjectiveHoms) {
    auto p = make_product(make_zmod(4), make_zmod(6));
    EXPECT_TRUE(is_surjective_hom(p.proj_first));
    EXPECT_TRUE(is_surjective_hom(p.proj_second));
    EXPECT_FALSE(is_injective_hom(p.proj_first));
}

TEST(FromTables, AcceptsZ2) {
    auto r = make_from_tables({{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}, 0, 1, "Z2");
    EXPECT_EQ(r->order(), 2);
    EXPECT_TRUE(validate_ring(r).empty());
}

TEST(FromTables, AcceptsZ2tFixtureTables) {
    // {0, 1, t, 1+t} with t^2 = 0.
    auto r = make_from_tables(
        {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
        {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 0, 2}, {0, 3, 2, 1}}, 0, 1,
        "Z2[t]/(t^2)");
    EXPECT_EQ(r->order(), 4);
    EXPECT_EQ(idempotents(r), (std::vector<Elem>{0, 1}));
}

TEST(FromTables, RejectsCorruptedZ4WithWitness) {
    auto t = make_zmod(4)->tables();
    t.mul[2 * 4 + 2] = 1;  // mul(2,2) := 1
    auto defects = validate_tables(t);
    ASSERT_FALSE(defects.empty());
    bool assoc_or_distrib = false;
    for (const auto& d : defects)
        if (d.axiom == "mul-associative" || d.axiom == "distributive") {
            assoc_or_distrib = true;
            EXPECT_EQ(d.witness.size(), 3u);
        }
    EXPECT_TRUE(assoc_or_distrib);

    try {
        make_from_tables(rows(t.add, 4), rows(t.mul, 4), 0, 1, "bad");
        FAIL() << "expected rejection";
    } catch (const ValidationError& e) {
        EXPECT_FALSE(e.defects.empty());
    }
}

TEST(ValidateRing, CleanRingsHaveEmptyReports) {
    EXPECT_TRUE(validate_ring(make_zmod(6)).empty());
    EXPECT_TRUE(validate_ring(make_zmod(1)).empty());
    EXPECT_TRUE(validate_ring(make_product(make_zmod(3), make_zmod(4)).ring).empty());
}

TEST(Idempotents, SpecCases) {
    EXPECT_EQ(idempotents(make_zmod(6)), (std::vector<Elem>{0, 1, 3, 4}));
    EXPECT_EQ(idempotents(make_zmod(4)), (std::vector<Elem>{0, 1}));
}

TEST(Idempotents, AlwaysContainZeroAndOne) {
    for (int n = 1; n <= 12; ++n) {
        auto r = make_zmod(n);
        auto es = idempotents(r);
        EXPECT_TRUE(std::find(es.begin(), es.end(), r->zero()) != es.end());
        EXPECT_TRUE(std::find(es.begin(), es.end(), r->one()) != es.end());
    }
}

TEST(Hom, IdentityIsValid) {
    auto z6 = make_zmod(6);
    auto id = identity_hom(z6);
    EXPECT_TRUE(is_injective_hom(id));
    EXPECT_TRUE(is_surjective_hom(id));
}

TEST(Hom, ReductionZ4toZ2) {
    auto f = make_hom(make_zmod(4), make_zmod(2), {0, 1, 0, 1});
    EXPECT_TRUE(is_surjective_hom(f));
    EXPECT_FALSE(is_injective_hom(f));
}

TEST(Hom, NoUnitalHomZ2toZ6) {
    // 1 |-> 1 forces 0 = f(1+1) = 2 in Z6.
    EXPECT_THROW(make_hom(make_zmod(2), make_zmod(6), {0, 1}), ValidationError);
}

TEST(Hom, DiagonalIntoProduct) {
    auto z2 = make_zmod(2);
    auto p = make_product(z2, z2);
    auto f = make_hom(z2, p.ring, {0, 3});  // a |-> (a, a)
    EXPECT_TRUE(is_injective_hom(f));
    EXPECT_FALSE(is_surjective_hom(f));
}

TEST(RingAxioms, HoldExhaustivelyAtDeskScale) {
    for (int n : {1, 2, 3, 4, 6, 8, 9, 12}) {
        auto r = make_zmod(n);
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y) {
                EXPECT_EQ(r->add(x, y), r->add(y, x));
                EXPECT_EQ(r->mul(x, y), r->mul(y, x));
                for (Elem z = 0; z < n; ++z) {
                    EXPECT_EQ(r->add(r->add(x, y), z), r->add(x, r->add(y, z)));
                    EXPECT_EQ(r->mul(r->mul(x, y), z), r->mul(x, r->mul(y, z)));
                    EXPECT_EQ(r->mul(x, r->add(y, z)),
                              r->add(r->mul(x, y), r->mul(x, z)));
                }
            }
    }
}
