#ifndef AMALGAM_CENSUS_HPP
#define AMALGAM_CENSUS_HPP

#include <string>
#include <vector>

#include "amalgam/spec_parser.hpp"
#include "amalgam/theorems.hpp"

namespace amalgam {

struct CorpusCaps {
    int max_ring_order = 12;     // Z_n for n up to this
    int max_product_order = 36;  // two-factor products up to this order
    int max_amalgam_order = 64;  // |A| * |J| for amalgamation data
};

/// One verification instance. The recipe (spec strings plus the idempotent
/// index) fully reproduces the instance; ids are unique within a campaign.
struct CorpusItem {
    enum class Kind { Ring, Product, Idempotent, Amalgam };

    std::string id;
    Kind kind = Kind::Ring;
    std::string spec;  // ring spec; amalgam/duplication spec for Kind::Amalgam
    std::vector<std::string> factor_specs;  // Kind::Product
    Elem idempotent = -1;                   // Kind::Idempotent
    bool is_duplication = false;            // Kind::Amalgam
    std::vector<std::string> tags;
};

/// Deterministic corpus: Z_n, two-factor products, registered fixtures, all
/// their nonzero idempotents, and all amalgamation data (A, B, f, J) over
/// unital homs between corpus rings, tagged by the hypotheses each instance
/// satisfies.
std::vector<CorpusItem> generate_corpus(const CorpusCaps& corpus_caps = {},
                                        const Caps& caps = {});

const std::vector<std::string>& all_statement_ids();
bool statement_applies(const std::string& statement_id, const CorpusItem& item);

enum class Outcome { Inapplicable, Consistent, Inconsistent, ResourceLimited };
std::string outcome_name(Outcome o);

struct CampaignRow {
    std::string item_id;
    std::string statement_id;
    Outcome outcome = Outcome::Inapplicable;
    Verdict verdict;           // default-constructed for ResourceLimited rows
    std::string limit_reason;  // ResourceLimited only
    double elapsed_ms = 0.0;
};

struct CampaignSummary {
    long long evaluated = 0;
    long long applicable = 0;
    long long consistent = 0;
    long long inconsistent = 0;
    long long inapplicable = 0;
    long long resource_limited = 0;

    friend bool operator==(const CampaignSummary&, const CampaignSummary&) = default;
};

struct CampaignReport {
    std::string campaign_id;
    Json environment;
    std::vector<CampaignRow> rows;
    CampaignSummary summary;
};

/// Evaluates one item against the statements that fit its kind. Resource
/// limits become ResourceLimited rows, never a consistency claim.
std::vector<CampaignRow> evaluate_item(const CorpusItem& item,
                                       const std::vector<std::string>& statements,
                                       const Caps& caps = {});

/// Runs every (item, statement) pair. The default entry point evaluates
/// items in an OpenMP worker pool with a deterministic ordered reduction;
/// the serial variant is the reference the tests compare against.
CampaignReport run_campaign(const std::vector<CorpusItem>& corpus,
                            const std::vector<std::string>& statements,
                            const Caps& caps = {});
CampaignReport run_campaign_serial(const std::vector<CorpusItem>& corpus,
                                   const std::vector<std::string>& statements,
                                   const Caps& caps = {});

/// 0 = all consistent, 1 = counterexample found, 2 = resource limit hit.
int campaign_exit_code(const CampaignReport& report);

Json report_to_json(const CampaignReport& report);
void write_report_json(const CampaignReport& report, const std::string& path);
/// One row per evaluated (item, statement) pair:
/// id,statement_id,applicable,consistent,witness_kind,elapsed_ms
void write_report_csv(const CampaignReport& report, const std::string& path);
std::string report_to_csv(const CampaignReport& report);

/// True when the two reports agree on everything except timings.
bool reports_equivalent(const CampaignReport& a, const CampaignReport& b);

}  // namespace amalgam

#endif
