// The OpenMP kernels must agree with their serial reference implementations
// on both results and witnesses.

#include <gtest/gtest.h>

#include "amalgam/census.hpp"
#include "amalgam/ring.hpp"

using namespace amalgam;

namespace {

void expect_same_defects(const std::vector<Defect>& a,
                         const std::vector<Defect>& b) {
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].axiom, b[i].axiom);
        EXPECT_EQ(a[i].witness, b[i].witness);
    }
}

}  // namespace

TEST(ParallelValidate, AgreesOnValidRings) {
    for (int n : {1, 2, 6, 16}) {
        auto t = make_zmod(n)->tables();
        expect_same_defects(validate_tables(t), validate_tables_serial(t));
    }
    auto big = make_product(make_zmod(12), make_zmod(12)).ring->tables();
    expect_same_defects(validate_tables(big), validate_tables_serial(big));
}

TEST(ParallelValidate, AgreesOnCorruptedRingsIncludingWitnesses) {
    // Corruptions in different table regions, including ones only the cubic
    // scans can catch.
    auto base = make_product(make_zmod(8), make_zmod(8)).ring->tables();
    for (int spot : {5, 100, 1000, 4000}) {
        auto t = base;
        t.mul[spot] = (t.mul[spot] + 1) % t.order;
        auto serial = validate_tables_serial(t);
        ASSERT_FALSE(serial.empty());
        expect_same_defects(validate_tables(t), serial);
    }
    auto t = base;
    t.add[3 * t.order + 7] = (t.add[3 * t.order + 7] + 1) % t.order;
    expect_same_defects(validate_tables(t), validate_tables_serial(t));
}

TEST(ParallelCampaign, MatchesSerialRunner) {
    auto corpus = generate_corpus(CorpusCaps{
        .max_ring_order = 6, .max_product_order = 9, .max_amalgam_order = 18});
    auto parallel = run_campaign(corpus, all_statement_ids());
    auto serial = run_campaign_serial(corpus, all_statement_ids());
    EXPECT_TRUE(reports_equivalent(parallel, serial));
    EXPECT_EQ(parallel.summary.inconsistent, 0);
}
