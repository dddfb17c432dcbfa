#include "amalgam/census.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

using namespace amalgam;

namespace {

CorpusCaps small_caps() {
    return CorpusCaps{.max_ring_order = 6, .max_product_order = 9,
                      .max_amalgam_order = 24};
}

bool has_id(const std::vector<CorpusItem>& corpus, const std::string& id) {
    for (const auto& item : corpus)
        if (item.id == id) return true;
    return false;
}

}  // namespace

TEST(GenerateCorpus, MembershipAtOrderNine) {
    auto corpus = generate_corpus(
        CorpusCaps{.max_ring_order = 9, .max_product_order = 9,
                   .max_amalgam_order = 18});
    for (int n = 2; n <= 9; ++n)
        EXPECT_TRUE(has_id(corpus, "ring:zmod(" + std::to_string(n) + ")"));
    EXPECT_TRUE(has_id(corpus, "ring:product(zmod(2), zmod(2))"));
    EXPECT_TRUE(has_id(corpus, "ring:product(zmod(2), zmod(3))"));
    EXPECT_TRUE(has_id(corpus, "ring:product(zmod(2), zmod(4))"));
    EXPECT_TRUE(has_id(corpus, "ring:product(zmod(3), zmod(3))"));
    EXPECT_TRUE(has_id(corpus, "ring:fixture(z2_t2)"));
    EXPECT_TRUE(has_id(corpus, "ring:fixture(z4_2t_t2)"));

    // Duplication items exist for every (ring, ideal) pair within range.
    EXPECT_TRUE(has_id(corpus, "dup:duplication(zmod(6), ideal(2, 4))"));
    EXPECT_TRUE(has_id(corpus, "dup:duplication(zmod(4), ideal(2))"));
    EXPECT_TRUE(has_id(corpus, "dup:duplication(zmod(9), ideal())"));

    // The Z4 -> Z2 reduction hom appears as amalgamation data.
    EXPECT_TRUE(has_id(corpus,
                       "amalgam:amalgam(zmod(4), zmod(2), reduction, ideal(1))"));
}

TEST(GenerateCorpus, DeterministicAndUniqueIds) {
    auto a = generate_corpus(small_caps());
    auto b = generate_corpus(small_caps());
    ASSERT_EQ(a.size(), b.size());
    std::set<std::string> ids;
    for (size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].id, b[i].id);
        EXPECT_EQ(a[i].spec, b[i].spec);
        EXPECT_EQ(a[i].tags, b[i].tags);
        EXPECT_TRUE(ids.insert(a[i].id).second) << "duplicate id " << a[i].id;
    }
}

TEST(GenerateCorpus, HypothesisTags) {
    auto corpus = generate_corpus(small_caps());
    for (const auto& item : corpus) {
        if (item.id == "dup:duplication(zmod(4), ideal(2))") {
            EXPECT_TRUE(std::find(item.tags.begin(), item.tags.end(),
                                  "duplication") != item.tags.end());
            EXPECT_TRUE(std::find(item.tags.begin(), item.tags.end(),
                                  "injective-f") != item.tags.end());
            EXPECT_TRUE(std::find(item.tags.begin(), item.tags.end(),
                                  "local-B") != item.tags.end());
        }
        if (item.id == "amalgam:amalgam(zmod(4), zmod(2), reduction, ideal(1))") {
            EXPECT_TRUE(std::find(item.tags.begin(), item.tags.end(),
                                  "surjective-f") != item.tags.end());
            EXPECT_TRUE(std::find(item.tags.begin(), item.tags.end(),
                                  "annB-J-zero") != item.tags.end());
            EXPECT_TRUE(std::find(item.tags.begin(), item.tags.end(),
                                  "J-full") != item.tags.end());
        }
    }
}

TEST(RunCampaign, DuplicationsOfSmallZnAreConsistent) {
    std::vector<CorpusItem> corpus;
    for (const auto& item : generate_corpus(
             CorpusCaps{.max_ring_order = 9, .max_product_order = 4,
                        .max_amalgam_order = 18}))
        if (item.kind == CorpusItem::Kind::Amalgam && item.is_duplication)
            corpus.push_back(item);
    ASSERT_FALSE(corpus.empty());
    auto report = run_campaign(corpus, {"thm-selfinj-char"});
    EXPECT_EQ(report.summary.inconsistent, 0);
    EXPECT_EQ(report.summary.resource_limited, 0);
    EXPECT_EQ(report.summary.inapplicable, 0);  // duplications always apply
    EXPECT_EQ(report.summary.applicable, (long long)corpus.size());
    EXPECT_EQ(campaign_exit_code(report), 0);
}

TEST(RunCampaign, DualIsoGatesOutNonSplitInstance) {
    CorpusItem item;
    item.spec = "duplication(zmod(4), ideal(2))";
    item.id = "dup:" + item.spec;
    item.kind = CorpusItem::Kind::Amalgam;
    item.is_duplication = true;
    auto report = run_campaign({item}, {"prop-dual-iso"});
    ASSERT_EQ(report.rows.size(), 1u);
    EXPECT_EQ(report.rows[0].outcome, Outcome::Inapplicable);
    EXPECT_EQ(report.summary.inapplicable, 1);
}

TEST(RunCampaign, EmptyCorpusGivesEmptyReport) {
    auto report = run_campaign({}, all_statement_ids());
    EXPECT_TRUE(report.rows.empty());
    EXPECT_EQ(report.summary.evaluated, 0);
    EXPECT_EQ(campaign_exit_code(report), 0);
}

TEST(RunCampaign, UnknownStatementRejected) {
    EXPECT_THROW(run_campaign({}, {"unknown-id"}), InvalidParameter);
}

TEST(RunCampaign, ReplayDeterminism) {
    auto corpus = generate_corpus(small_caps());
    std::vector<CorpusItem> sample;
    for (const auto& item : corpus)
        if (item.kind == CorpusItem::Kind::Amalgam) {
            sample.push_back(item);
            if (sample.size() == 8) break;
        }
    auto report = run_campaign(sample, all_statement_ids());
    for (const auto& row : report.rows) {
        // Re-evaluate the row's item in isolation; the verdict must agree.
        const CorpusItem* item = nullptr;
        for (const auto& it : sample)
            if (it.id == row.item_id) item = &it;
        ASSERT_NE(item, nullptr);
        auto replay = evaluate_item(*item, {row.statement_id});
        ASSERT_EQ(replay.size(), 1u);
        EXPECT_EQ(replay[0].outcome, row.outcome);
        EXPECT_EQ(to_json(replay[0].verdict), to_json(row.verdict));
    }
}

TEST(RunCampaign, ResourceLimitedNeverClaimsConsistency) {
    Caps caps;
    caps.hom_combinations = 0;  // forces every hom enumeration over the cap
    CorpusItem item;
    item.spec = "duplication(zmod(6), ideal(2))";
    item.id = "dup:" + item.spec;
    item.kind = CorpusItem::Kind::Amalgam;
    item.is_duplication = true;
    auto report = run_campaign({item}, {"prop-hom-iso", "prop-dual-iso"}, caps);
    ASSERT_EQ(report.rows.size(), 2u);
    for (const auto& row : report.rows) {
        EXPECT_EQ(row.outcome, Outcome::ResourceLimited);
        EXPECT_FALSE(row.limit_reason.empty());
    }
    EXPECT_EQ(report.summary.resource_limited, 2);
    EXPECT_EQ(report.summary.consistent, 0);
    EXPECT_EQ(campaign_exit_code(report), 2);
}

TEST(Reports, JsonRoundTripAndCsvShape) {
    auto corpus = generate_corpus(small_caps());
    std::vector<CorpusItem> sample(corpus.begin(),
                                   corpus.begin() + std::min<size_t>(24, corpus.size()));
    auto report = run_campaign(sample, {"thm-selfinj-char", "lem-product-qf",
                                        "remark-idempotent"});

    const std::string json_path = "census_test_report.json";
    write_report_json(report, json_path);
    std::ifstream in(json_path);
    ASSERT_TRUE(in.good());
    Json parsed = Json::parse(in);
    EXPECT_EQ(parsed, report_to_json(report));
    std::remove(json_path.c_str());

    auto csv = report_to_csv(report);
    size_t lines = std::count(csv.begin(), csv.end(), '\n');
    EXPECT_EQ(lines, report.rows.size() + 1);  // header + one row per pair

    // Summary counts match CSV tallies. The id column is quoted (specs
    // contain commas); the remaining columns are comma-split.
    std::istringstream csv_in(csv);
    std::string line;
    std::getline(csv_in, line);  // header
    long long consistent = 0, inconsistent = 0, inapplicable = 0, limited = 0;
    while (std::getline(csv_in, line)) {
        ASSERT_EQ(line.front(), '"');
        const size_t close = line.find('"', 1);
        ASSERT_NE(close, std::string::npos);
        std::vector<std::string> cols;
        std::string cur;
        for (char c : line.substr(close + 2)) {
            if (c == ',') {
                cols.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        cols.push_back(cur);
        ASSERT_EQ(cols.size(), 5u);  // statement, applicable, consistent, witness, ms
        if (cols[3] == "resource-limit")
            ++limited;
        else if (cols[1] == "false")
            ++inapplicable;
        else if (cols[2] == "true")
            ++consistent;
        else
            ++inconsistent;
    }
    EXPECT_EQ(consistent, report.summary.consistent);
    EXPECT_EQ(inconsistent, report.summary.inconsistent);
    EXPECT_EQ(inapplicable, report.summary.inapplicable);
    EXPECT_EQ(limited, report.summary.resource_limited);
}

TEST(Reports, SummaryMatchesRowTallies) {
    auto corpus = generate_corpus(small_caps());
    std::vector<CorpusItem> sample(corpus.begin(),
                                   corpus.begin() + std::min<size_t>(40, corpus.size()));
    auto report = run_campaign(sample, all_statement_ids());
    long long consistent = 0, inconsistent = 0, inapplicable = 0, limited = 0;
    for (const auto& row : report.rows) switch (row.outcome) {
            case Outcome::Consistent: ++consistent; break;
            case Outcome::Inconsistent: ++inconsistent; break;
            case Outcome::Inapplicable: ++inapplicable; break;
            case Outcome::ResourceLimited: ++limited; break;
        }
    EXPECT_EQ(report.summary.consistent, consistent);
    EXPECT_EQ(report.summary.inconsistent, inconsistent);
    EXPECT_EQ(report.summary.inapplicable, inapplicable);
    EXPECT_EQ(report.summary.resource_limited, limited);
    EXPECT_EQ(report.summary.applicable, consistent + inconsistent);
    EXPECT_EQ(report.summary.evaluated, (long long)report.rows.size());
}

TEST(ExitCodes, MappingFromSummaries) {
    CampaignReport r;
    r.summary = {};
    EXPECT_EQ(campaign_exit_code(r), 0);
    r.summary.inconsistent = 1;
    EXPECT_EQ(campaign_exit_code(r), 1);
    r.summary.inconsistent = 0;
    r.summary.resource_limited = 3;
    EXPECT_EQ(campaign_exit_code(r), 2);
    r.summary.inconsistent = 2;  // counterexamples outrank resource limits
    EXPECT_EQ(campaign_exit_code(r), 1);
}
