#include "amalgam/ideal.hpp"

#include <gtest/gtest.h>

using namespace amalgam;

namespace {

std::vector<RingPtr> small_census() {
    std::vector<RingPtr> out;
    for (int n = 2; n <= 9; ++n) out.push_back(make_zmod(n));
    out.push_back(make_product(make_zmod(2), make_zmod(2)).ring);
    out.push_back(make_product(make_zmod(2), make_zmod(4)).ring);
    return out;
}

}  // namespace

TEST(IdealGenerated, SpecCases) {
    auto z6 = make_zmod(6);
    EXPECT_EQ(ideal_generated(z6, {2}).elements(), (std::vector<Elem>{0, 2, 4}));
    EXPECT_EQ(ideal_generated(z6, {}).elements(), (std::vector<Elem>{0}));
    EXPECT_EQ(ideal_generated(z6, {4}).elements(), (std::vector<Elem>{0, 2, 4}));
    EXPECT_THROW(ideal_generated(z6, {6}), InvalidParameter);
}

TEST(AllIdeals, SpecCases) {
    auto z6 = make_zmod(6);
    auto lattice = all_ideals(z6);
    ASSERT_EQ(lattice.size(), 4u);
    EXPECT_EQ(lattice[0].elements(), (std::vector<Elem>{0}));
    EXPECT_EQ(lattice[1].elements(), (std::vector<Elem>{0, 3}));
    EXPECT_EQ(lattice[2].elements(), (std::vector<Elem>{0, 2, 4}));
    EXPECT_EQ(lattice[3].elements(), (std::vector<Elem>{0, 1, 2, 3, 4, 5}));

    EXPECT_EQ(all_ideals(make_zmod(4)).size(), 3u);
    EXPECT_EQ(all_ideals(make_product(make_zmod(2), make_zmod(2)).ring).size(), 4u);
}

TEST(AllIdeals, LatticeCapIsAnError) {
    Caps caps;
    caps.ideal_lattice = 2;
    EXPECT_THROW(all_ideals(make_zmod(6), caps), ResourceLimitError);
}

TEST(Annihilator, SpecCases) {
    auto z6 = make_zmod(6);
    EXPECT_EQ(annihilator(z6, {0, 2, 4}).elements(), (std::vector<Elem>{0, 3}));
    EXPECT_EQ(annihilator(z6, {0, 3}).elements(), (std::vector<Elem>{0, 2, 4}));
    auto z4 = make_zmod(4);
    EXPECT_EQ(annihilator(z4, {0, 2}).elements(), (std::vector<Elem>{0, 2}));
}

TEST(IdealArithmetic, SpecCases) {
    auto z6 = make_zmod(6);
    Ideal a(z6, {0, 3}), b(z6, {0, 2, 4});
    EXPECT_EQ(ideal_sum(a, b).size(), 6);
    EXPECT_EQ(ideal_intersection(a, b).elements(), (std::vector<Elem>{0}));
    auto z4 = make_zmod(4);
    Ideal c(z4, {0, 2});
    EXPECT_EQ(ideal_product(c, c).elements(), (std::vector<Elem>{0}));
}

TEST(IdealArithmetic, MismatchedParentsRejected) {
    Ideal a(make_zmod(6), {0, 3});
    Ideal b(make_zmod(4), {0, 2});
    EXPECT_THROW(ideal_sum(a, b), InvalidParameter);
}

TEST(IdempotentGenerator, SpecCases) {
    auto z6 = make_zmod(6);
    EXPECT_EQ(idempotent_generator(z6, Ideal(z6, {0, 2, 4})), 4);
    EXPECT_EQ(idempotent_generator(z6, Ideal(z6, {0})), 0);
    auto z4 = make_zmod(4);
    EXPECT_FALSE(idempotent_generator(z4, Ideal(z4, {0, 2})).has_value());
}

TEST(RegularElements, SpecCases) {
    auto z6 = make_zmod(6);
    EXPECT_TRUE(is_regular_element(z6, 5));
    EXPECT_FALSE(is_regular_element(z6, 2));
    EXPECT_TRUE(is_regular_element(make_zmod(4), 3));
}

TEST(MaximalIdeals, SpecCases) {
    auto z6 = make_zmod(6);
    auto maxes = maximal_ideals(z6);
    ASSERT_EQ(maxes.size(), 2u);
    EXPECT_EQ(maxes[0].elements(), (std::vector<Elem>{0, 3}));
    EXPECT_EQ(maxes[1].elements(), (std::vector<Elem>{0, 2, 4}));

    auto z4max = maximal_ideals(make_zmod(4));
    ASSERT_EQ(z4max.size(), 1u);
    EXPECT_EQ(z4max[0].elements(), (std::vector<Elem>{0, 2}));

    EXPECT_EQ(maximal_ideals(make_product(make_zmod(2), make_zmod(2)).ring).size(), 2u);
    EXPECT_THROW(maximal_ideals(make_zmod(1)), InvalidParameter);
}

TEST(IsLocal, SpecCases) {
    EXPECT_TRUE(is_local(make_zmod(4)));
    EXPECT_FALSE(is_local(make_zmod(6)));
    auto z2t = make_from_tables(
        {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
        {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 0, 2}, {0, 3, 2, 1}}, 0, 1,
        "Z2[t]/(t^2)");
    EXPECT_TRUE(is_local(z2t));
    EXPECT_EQ(maximal_ideals(z2t)[0].elements(), (std::vector<Elem>{0, 2}));
    EXPECT_THROW(is_local(make_zmod(1)), InvalidParameter);
}

TEST(QuotientRing, SpecCases) {
    auto z6 = make_zmod(6);
    auto q = quotient_ring(z6, Ideal(z6, {0, 2, 4}));
    EXPECT_EQ(q.ring->order(), 2);
    EXPECT_TRUE(is_surjective_hom(q.projection));

    auto z4 = make_zmod(4);
    auto q0 = quotient_ring(z4, Ideal(z4, {0}));
    EXPECT_EQ(q0.ring->order(), 4);
    for (Elem x = 0; x < 4; ++x) EXPECT_EQ(q0.projection.map[x], x);

    auto q1 = quotient_ring(z4, Ideal(z4, {0, 1, 2, 3}));
    EXPECT_EQ(q1.ring->order(), 1);
}

TEST(QuotientRing, OrderAndKernel) {
    auto z12 = make_zmod(12);
    for (const auto& i : all_ideals(z12)) {
        auto q = quotient_ring(z12, i);
        EXPECT_EQ(q.ring->order() * i.size(), 12);
        std::vector<Elem> kernel;
        for (Elem x = 0; x < 12; ++x)
            if (q.projection.map[x] == q.ring->zero()) kernel.push_back(x);
        EXPECT_EQ(kernel, i.elements());
    }
}

TEST(PreimageIdeal, SpecCases) {
    auto z6 = make_zmod(6);
    auto id = identity_hom(z6);
    EXPECT_EQ(preimage_ideal(id, Ideal(z6, {0})).elements(), (std::vector<Elem>{0}));

    auto z4 = make_zmod(4);
    auto z2 = make_zmod(2);
    auto red = make_hom(z4, z2, {0, 1, 0, 1});
    EXPECT_EQ(preimage_ideal(red, Ideal(z2, {0})).elements(),
              (std::vector<Elem>{0, 2}));
    EXPECT_EQ(preimage_ideal(red, Ideal(z2, {0, 1})).size(), 4);
}

// Lattice-wide properties over a small census.
TEST(IdealProperties, AnnihilatorInclusionReversingAndDouble) {
    for (const auto& r : small_census()) {
        auto lattice = all_ideals(r);
        for (const auto& i : lattice) {
            auto ann_ann = annihilator(annihilator(i));
            for (Elem x : i.elements()) EXPECT_TRUE(ann_ann.contains(x));
            for (const auto& k : lattice) {
                bool subset = true;
                for (Elem x : i.elements())
                    if (!k.contains(x)) {
                        subset = false;
                        break;
                    }
                if (subset) {
                    auto ann_k = annihilator(k), ann_i = annihilator(i);
                    for (Elem x : ann_k.elements()) EXPECT_TRUE(ann_i.contains(x));
                }
            }
        }
    }
}

TEST(IdealProperties, GeneratedIsIdempotentAndLatticeClosed) {
    for (const auto& r : small_census()) {
        auto lattice = all_ideals(r);
        auto find = [&](const Ideal& x) {
            for (const auto& i : lattice)
                if (i == x) return true;
            return false;
        };
        for (const auto& i : lattice) {
            EXPECT_EQ(ideal_generated(r, i.elements()), i);
            EXPECT_TRUE(find(annihilator(i)));
            for (const auto& k : lattice) {
                EXPECT_TRUE(find(ideal_sum(i, k)));
                EXPECT_TRUE(find(ideal_intersection(i, k)));
                EXPECT_TRUE(find(ideal_product(i, k)));
            }
        }
    }
}

TEST(IdealProperties, AnnihilatorOfSubsetEqualsAnnihilatorOfGeneratedIdeal) {
    for (const auto& r : small_census()) {
        for (Elem x = 0; x < r->order(); ++x)
            for (Elem y = 0; y < r->order(); ++y) {
                auto direct = annihilator(r, {x, y});
                auto via_ideal = annihilator(ideal_generated(r, {x, y}));
                EXPECT_EQ(direct, via_ideal);
            }
    }
}

TEST(IdealProperties, IdempotentGeneratorContract) {
    for (const auto& r : small_census()) {
        for (const auto& i : all_ideals(r)) {
            auto e = idempotent_generator(r, i);
            if (e) {
                EXPECT_TRUE(r->is_idempotent(*e));
                EXPECT_EQ(ideal_generated(r, {*e}), i);
            }
        }
    }
}

TEST(IsLocal, AgreesWithIdempotentCriterionOverCensus) {
    for (const auto& r : small_census()) {
        // is_local throws if the two criteria ever disagree.
        (void)is_local(r);
    }
}
