#include "amalgam/census.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "amalgam/ideal.hpp"

namespace amalgam {

namespace {

std::string hom_spec_text(const RingHom& f) {
    // Prefer the readable spellings when they apply.
    bool identity = f.domain->same_tables(*f.codomain);
    if (identity)
        for (int i = 0; i < f.domain->order(); ++i)
            if (f.map[i] != i) {
                identity = false;
                break;
            }
    if (identity) return "identity";

    auto canonical_zmod = [](const FiniteRing& r) {
        for (int i = 0; i < r.order(); ++i)
            for (int j = 0; j < r.order(); ++j)
                if (r.add(i, j) != (i + j) % r.order() ||
                    r.mul(i, j) != (i * j) % r.order())
                    return false;
        return r.zero() == 0 && r.one() == 1 % r.order();
    };
    if (canonical_zmod(*f.domain) && canonical_zmod(*f.codomain) &&
        f.domain->order() % f.codomain->order() == 0) {
        bool reduction = true;
        for (int i = 0; i < f.domain->order(); ++i)
            if (f.map[i] != i % f.codomain->order()) {
                reduction = false;
                break;
            }
        if (reduction) return "reduction";
    }

    std::string out = "map(";
    for (size_t i = 0; i < f.map.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(f.map[i]);
    }
    return out + ")";
}

std::string ideal_spec_text(const Ideal& i) {
    std::string out = "ideal(";
    bool first = true;
    for (Elem x : i.elements()) {
        if (x == i.ring()->zero()) continue;  // zero is implied
        if (!first) out += ", ";
        out += std::to_string(x);
        first = false;
    }
    return out + ")";
}

struct NamedRing {
    std::string spec;
    RingPtr ring;
};

std::vector<std::string> amalgam_tags(const RingPtr& a, const RingPtr& b,
                                      const RingHom& f, const Ideal& j,
                                      const Caps& caps) {
    std::vector<std::string> tags;
    if (is_injective_hom(f)) tags.push_back("injective-f");
    if (is_surjective_hom(f)) tags.push_back("surjective-f");
    std::vector<char> image(b->order(), 0);
    for (Elem y : f.map) image[y] = 1;
    bool contained = true;
    for (Elem x : j.elements())
        if (!image[x]) {
            contained = false;
            break;
        }
    if (contained) tags.push_back("J-in-fA");
    if (j.is_zero()) tags.push_back("J-zero");
    if (j.is_whole_ring()) tags.push_back("J-full");
    if (b->order() >= 2 && is_local(b, caps)) tags.push_back("local-B");
    if (a->order() >= 2 && is_local(a, caps)) tags.push_back("local-A");
    if (annihilator(b, j.elements()).is_zero()) tags.push_back("annB-J-zero");
    return tags;
}

}  // namespace

std::vector<CorpusItem> generate_corpus(const CorpusCaps& corpus_caps,
                                        const Caps& caps) {
    if (corpus_caps.max_ring_order < 2 || corpus_caps.max_product_order < 4 ||
        corpus_caps.max_amalgam_order < 2)
        throw InvalidParameter("generate_corpus: caps too small");

    std::vector<NamedRing> bases;
    for (int n = 2; n <= corpus_caps.max_ring_order; ++n)
        bases.push_back({"zmod(" + std::to_string(n) + ")", make_zmod(n)});
    for (const auto& f : builtin_fixtures())
        bases.push_back({"fixture(" + f.name + ")", f.ring});

    std::vector<NamedRing> rings = bases;
    std::vector<std::pair<std::string, std::string>> product_pairs;
    for (size_t i = 0; i < bases.size(); ++i)
        for (size_t j = i; j < bases.size(); ++j) {
            const auto &r = bases[i], &s = bases[j];
            if (r.ring->order() * s.ring->order() > corpus_caps.max_product_order)
                continue;
            std::string spec = "product(" + r.spec + ", " + s.spec + ")";
            rings.push_back({spec, make_product(r.ring, s.ring).ring});
            product_pairs.push_back({r.spec, s.spec});
        }

    std::vector<CorpusItem> corpus;

    for (const auto& r : rings) {
        CorpusItem item;
        item.id = "ring:" + r.spec;
        item.kind = CorpusItem::Kind::Ring;
        item.spec = r.spec;
        corpus.push_back(std::move(item));
    }

    for (const auto& [a, b] : product_pairs) {
        CorpusItem item;
        item.id = "product:" + a + "*" + b;
        item.kind = CorpusItem::Kind::Product;
        item.spec = "product(" + a + ", " + b + ")";
        item.factor_specs = {a, b};
        corpus.push_back(std::move(item));
    }

    for (const auto& r : rings) {
        for (Elem e : idempotents(r.ring)) {
            if (e == r.ring->zero()) continue;
            CorpusItem item;
            item.id = "idem:" + r.spec + ":e=" + std::to_string(e);
            item.kind = CorpusItem::Kind::Idempotent;
            item.spec = r.spec;
            item.idempotent = e;
            corpus.push_back(std::move(item));
        }
    }

    // Duplications: every (ring, ideal) pair within the amalgam order cap.
    for (const auto& r : rings) {
        for (const Ideal& i : all_ideals(r.ring, caps)) {
            if ((long long)r.ring->order() * i.size() >
                corpus_caps.max_amalgam_order)
                continue;
            CorpusItem item;
            item.spec = "duplication(" + r.spec + ", " + ideal_spec_text(i) + ")";
            item.id = "dup:" + item.spec;
            item.kind = CorpusItem::Kind::Amalgam;
            item.is_duplication = true;
            item.tags = amalgam_tags(r.ring, r.ring, identity_hom(r.ring), i, caps);
            item.tags.insert(item.tags.begin(), "duplication");
            corpus.push_back(std::move(item));
        }
    }

    // General amalgamation data over all unital homs between corpus rings.
    for (const auto& a : rings) {
        for (const auto& b : rings) {
            if ((long long)a.ring->order() > corpus_caps.max_amalgam_order)
                continue;
            std::vector<RingHom> homs;
            try {
                homs = enumerate_ring_homs(a.ring, b.ring, caps);
            } catch (const ResourceLimitError&) {
                continue;  // no homs recorded for this pair; corpus stays deterministic
            }
            for (const auto& f : homs) {
                const std::string hom_text = hom_spec_text(f);
                if (a.spec == b.spec && hom_text == "identity")
                    continue;  // already covered by the duplication items
                for (const Ideal& j : all_ideals(b.ring, caps)) {
                    if ((long long)a.ring->order() * j.size() >
                        corpus_caps.max_amalgam_order)
                        continue;
                    CorpusItem item;
                    item.spec = "amalgam(" + a.spec + ", " + b.spec + ", " +
                                hom_text + ", " + ideal_spec_text(j) + ")";
                    item.id = "amalgam:" + item.spec;
                    item.kind = CorpusItem::Kind::Amalgam;
                    item.tags = amalgam_tags(a.ring, b.ring, f, j, caps);
                    corpus.push_back(std::move(item));
                }
            }
        }
    }

    return corpus;
}

const std::vector<std::string>& all_statement_ids() {
    static const std::vector<std::string> ids = {
        "prop-hom-iso",
        "prop-dual-iso",
        "remark-idempotent",
        "thm-selfinj-char",
        "cor-local-never",
        "cor-duplication",
        "thm-qf-char",
        "lem-product-qf",
        "lem-descent-qf",
        "lem-hom-iso-surjective",
        "prop-local-surjective-qf",
    };
    return ids;
}

bool statement_applies(const std::string& statement_id, const CorpusItem& item) {
    using Kind = CorpusItem::Kind;
    if (statement_id == "lem-product-qf") return item.kind == Kind::Product;
    if (statement_id == "remark-idempotent")
        return item.kind == Kind::Idempotent;
    if (statement_id == "cor-duplication")
        return item.kind == Kind::Amalgam && item.is_duplication;
    if (item.kind != Kind::Amalgam) return false;
    return statement_id == "prop-hom-iso" || statement_id == "prop-dual-iso" ||
           statement_id == "thm-selfinj-char" ||
           statement_id == "cor-local-never" || statement_id == "thm-qf-char" ||
           statement_id == "lem-descent-qf" ||
           statement_id == "lem-hom-iso-surjective" ||
           statement_id == "prop-local-surjective-qf";
}

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Inapplicable:
            return "inapplicable";
        case Outcome::Consistent:
            return "consistent";
        case Outcome::Inconsistent:
            return "inconsistent";
        case Outcome::ResourceLimited:
            return "resource-limit";
    }
    return "";
}

namespace {

Verdict dispatch(const std::string& statement_id, const CorpusItem& item,
                 const Caps& caps) {
    if (item.kind == CorpusItem::Kind::Product) {
        std::vector<RingPtr> factors;
        for (const auto& spec : item.factor_specs)
            factors.push_back(eval_spec_text(spec, caps).ring);
        return verify_product_qf(factors, caps);
    }
    if (item.kind == CorpusItem::Kind::Idempotent) {
        auto ring = eval_spec_text(item.spec, caps).ring;
        return verify_remark_idempotent(ring, item.idempotent, caps);
    }
    auto evaluated = eval_spec_text(item.spec, caps);
    if (!evaluated.amalgam)
        throw InvalidParameter("item spec does not construct an amalgam: " +
                               item.spec);
    const Amalgam& w = *evaluated.amalgam;
    if (statement_id == "prop-hom-iso") return verify_prop_hom_iso(w, caps);
    if (statement_id == "prop-dual-iso") return verify_prop_dual_iso(w, caps);
    if (statement_id == "thm-selfinj-char")
        return verify_selfinjective_characterization(w, caps);
    if (statement_id == "cor-local-never") return verify_local_never(w, caps);
    if (statement_id == "cor-duplication")
        return verify_duplication(w.a_ring, w.j_ideal, caps);
    if (statement_id == "thm-qf-char") return verify_qf_characterization(w, caps);
    if (statement_id == "lem-descent-qf") return verify_descent_qf(w, caps);
    if (statement_id == "lem-hom-iso-surjective")
        return verify_hom_iso_surjective_case(w, caps);
    if (statement_id == "prop-local-surjective-qf")
        return verify_local_surjective_qf(w, caps);
    throw InvalidParameter("unknown statement id: " + statement_id);
}

CampaignSummary summarize(const std::vector<CampaignRow>& rows) {
    CampaignSummary s;
    s.evaluated = (long long)rows.size();
    for (const auto& row : rows) switch (row.outcome) {
            case Outcome::Inapplicable:
                ++s.inapplicable;
                break;
            case Outcome::Consistent:
                ++s.applicable;
                ++s.consistent;
                break;
            case Outcome::Inconsistent:
                ++s.applicable;
                ++s.inconsistent;
                break;
            case Outcome::ResourceLimited:
                ++s.resource_limited;
                break;
        }
    return s;
}

Json environment_json(const Caps& caps) {
    return Json{{"caps",
                 {{"amalgam_order", caps.amalgam_order},
                  {"ideal_lattice", caps.ideal_lattice},
                  {"module_order", caps.module_order},
                  {"generating_sequence", caps.generating_sequence},
                  {"hom_combinations", caps.hom_combinations},
                  {"iso_nodes", caps.iso_nodes},
                  {"baer_cross_check", caps.baer_cross_check}}},
                {"omp_max_threads", omp_get_max_threads()}};
}

template <typename RunFn>
CampaignReport assemble_campaign(const std::vector<CorpusItem>& corpus,
                                 const std::vector<std::string>& statements,
                                 const Caps& caps, RunFn&& run_items) {
    for (const auto& s : statements) {
        const auto& known = all_statement_ids();
        if (std::find(known.begin(), known.end(), s) == known.end())
            throw InvalidParameter("unknown statement id: " + s);
    }
    CampaignReport report;
    report.campaign_id = "campaign(items=" + std::to_string(corpus.size()) +
                         ", statements=" + std::to_string(statements.size()) +
                         ")";
    report.environment = environment_json(caps);

    std::vector<std::vector<CampaignRow>> per_item(corpus.size());
    run_items(per_item);
    for (auto& rows : per_item)
        for (auto& row : rows) report.rows.push_back(std::move(row));
    report.summary = summarize(report.rows);
    return report;
}

}  // namespace

std::vector<CampaignRow> evaluate_item(const CorpusItem& item,
                                       const std::vector<std::string>& statements,
                                       const Caps& caps) {
    std::vector<CampaignRow> rows;
    for (const auto& statement : statements) {
        if (!statement_applies(statement, item)) continue;
        CampaignRow row;
        row.item_id = item.id;
        row.statement_id = statement;
        const auto start = std::chrono::steady_clock::now();
        try {
            row.verdict = dispatch(statement, item, caps);
            if (!row.verdict.applicable)
                row.outcome = Outcome::Inapplicable;
            else
                row.outcome = row.verdict.consistent ? Outcome::Consistent
                                                     : Outcome::Inconsistent;
        } catch (const ResourceLimitError& e) {
            row.outcome = Outcome::ResourceLimited;
            row.limit_reason = e.what();
        }
        row.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        rows.push_back(std::move(row));
    }
    return rows;
}

CampaignReport run_campaign_serial(const std::vector<CorpusItem>& corpus,
                                   const std::vector<std::string>& statements,
                                   const Caps& caps) {
    return assemble_campaign(
        corpus, statements, caps, [&](std::vector<std::vector<CampaignRow>>& out) {
            for (size_t i = 0; i < corpus.size(); ++i)
                out[i] = evaluate_item(corpus[i], statements, caps);
        });
}

CampaignReport run_campaign(const std::vector<CorpusItem>& corpus,
                            const std::vector<std::string>& statements,
                            const Caps& caps) {
    return assemble_campaign(
        corpus, statements, caps, [&](std::vector<std::vector<CampaignRow>>& out) {
            std::string first_error;
            const long long n = (long long)corpus.size();
#pragma omp parallel for schedule(dynamic)
            for (long long i = 0; i < n; ++i) {
                try {
                    out[i] = evaluate_item(corpus[i], statements, caps);
                } catch (const std::exception& e) {
#pragma omp critical(amalgam_campaign_error)
                    if (first_error.empty())
                        first_error = corpus[i].id + ": " + e.what();
                }
            }
            if (!first_error.empty())
                throw std::runtime_error("campaign evaluation failed: " +
                                         first_error);
        });
}

int campaign_exit_code(const CampaignReport& report) {
    if (report.summary.inconsistent > 0) return 1;
    if (report.summary.resource_limited > 0) return 2;
    return 0;
}

Json report_to_json(const CampaignReport& report) {
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json j{{"item_id", row.item_id},
               {"statement_id", row.statement_id},
               {"outcome", outcome_name(row.outcome)},
               {"elapsed_ms", row.elapsed_ms}};
        if (row.outcome == Outcome::ResourceLimited) {
            j["limit_reason"] = row.limit_reason;
            j["verdict"] = Json();
        } else {
            j["verdict"] = to_json(row.verdict);
        }
        rows.push_back(std::move(j));
    }
    return Json{{"campaign_id", report.campaign_id},
                {"environment", report.environment},
                {"summary",
                 {{"evaluated", report.summary.evaluated},
                  {"applicable", report.summary.applicable},
                  {"consistent", report.summary.consistent},
                  {"inconsistent", report.summary.inconsistent},
                  {"inapplicable", report.summary.inapplicable},
                  {"resource_limited", report.summary.resource_limited}}},
                {"rows", rows}};
}

void write_report_json(const CampaignReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write report to '" + path + "'");
    out << report_to_json(report).dump(2) << '\n';
    if (!out) throw IoError("write failed for '" + path + "'");
}

std::string report_to_csv(const CampaignReport& report) {
    std::ostringstream out;
    out << "id,statement_id,applicable,consistent,witness_kind,elapsed_ms\n";
    for (const auto& row : report.rows) {
        std::string applicable, consistent, witness_kind;
        switch (row.outcome) {
            case Outcome::ResourceLimited:
                witness_kind = "resource-limit";
                break;
            case Outcome::Inapplicable:
                applicable = "false";
                break;
            case Outcome::Consistent:
            case Outcome::Inconsistent:
                applicable = "true";
                consistent = row.verdict.consistent ? "true" : "false";
                if (row.verdict.witness.is_object())
                    witness_kind = row.verdict.witness.value("kind", "");
                break;
        }
        out << '"' << row.item_id << "\"," << row.statement_id << ','
            << applicable << ',' << consistent << ',' << witness_kind << ','
            << row.elapsed_ms << '\n';
    }
    return out.str();
}

void write_report_csv(const CampaignReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write report to '" + path + "'");
    out << report_to_csv(report);
    if (!out) throw IoError("write failed for '" + path + "'");
}

bool reports_equivalent(const CampaignReport& a, const CampaignReport& b) {
    if (!(a.summary == b.summary) || a.rows.size() != b.rows.size())
        return false;
    for (size_t i = 0; i < a.rows.size(); ++i) {
        const auto &x = a.rows[i], &y = b.rows[i];
        if (x.item_id != y.item_id || x.statement_id != y.statement_id ||
            x.outcome != y.outcome)
            return false;
        if (to_json(x.verdict) != to_json(y.verdict)) return false;
    }
    return true;
}

}  // namespace amalgam
