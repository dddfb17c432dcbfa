// Command-line front end: parse ring specs, run checks, list ideals, dump
// the census corpus, and drive verification campaigns.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "amalgam/census.hpp"
#include "amalgam/ideal.hpp"
#include "amalgam/module.hpp"
#include "amalgam/spec_parser.hpp"

namespace {

using namespace amalgam;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitResourceLimit = 2;
constexpr int kExitUsage = 64;

Caps caps_from_env() {
    Caps caps;
    if (const char* v = std::getenv("AMALGAM_MAX_ORDER")) {
        try {
            caps.amalgam_order = std::stoi(v);
        } catch (const std::exception&) {
            throw InvalidParameter("AMALGAM_MAX_ORDER is not an integer");
        }
    }
    return caps;
}

std::string elems_to_text(const std::vector<Elem>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(xs[i]);
    }
    return out;
}

int run_check(const std::string& what, const std::string& spec_text,
              bool as_json, const Caps& caps) {
    auto evaluated = eval_spec_text(spec_text, caps);
    const RingPtr& ring = evaluated.ring;
    Json out{{"spec", spec_text}, {"ring", ring->label()},
             {"order", ring->order()}, {"check", what}};

    if (what == "self-injective" || what == "qf") {
        auto result = self_injectivity(ring, caps);
        out["value"] = result.value;
        if (what == "qf")
            out["noetherian"] = "trivially true (finite)";
        if (result.failing_ideal) {
            out["witness"] = Json{
                {"kind", "double-annihilator-failure"},
                {"ideal", result.failing_ideal->elements()},
                {"ann_ann",
                 annihilator(annihilator(*result.failing_ideal)).elements()}};
        } else {
            out["witness"] = Json();
        }
        if (!as_json) {
            std::cout << (result.value ? "true" : "false") << '\n';
            if (result.failing_ideal)
                std::cout << "counterexample ideal: "
                          << elems_to_text(result.failing_ideal->elements())
                          << '\n';
        }
    } else if (what == "local") {
        const bool value = is_local(ring, caps);
        out["value"] = value;
        if (!as_json) std::cout << (value ? "true" : "false") << '\n';
    } else if (what == "idempotents") {
        auto es = idempotents(ring);
        out["value"] = es;
        if (!as_json) std::cout << elems_to_text(es) << '\n';
    } else if (what == "ideals") {
        Json list = Json::array();
        auto lattice = all_ideals(ring, caps);
        for (const auto& i : lattice) {
            list.push_back(Json{{"elements", i.elements()},
                                {"idempotent_generator",
                                 idempotent_generator(ring, i)
                                     ? Json(*idempotent_generator(ring, i))
                                     : Json()}});
            if (!as_json) std::cout << elems_to_text(i.elements()) << '\n';
        }
        out["value"] = list;
        out["count"] = lattice.size();
    } else {
        throw CLI::ValidationError("check", "unknown check '" + what + "'");
    }
    if (as_json) std::cout << out.dump(2) << '\n';
    return kExitOk;
}

std::vector<std::string> resolve_statements(const std::string& statements,
                                            const std::string& only) {
    if (!only.empty()) {
        const auto& known = all_statement_ids();
        if (std::find(known.begin(), known.end(), only) == known.end())
            throw CLI::ValidationError("--only", "unknown statement id '" + only + "'");
        return {only};
    }
    if (statements == "all" || statements.empty()) return all_statement_ids();
    std::vector<std::string> out;
    std::string cur;
    for (char c : statements + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    const auto& known = all_statement_ids();
    for (const auto& s : out)
        if (std::find(known.begin(), known.end(), s) == known.end())
            throw CLI::ValidationError("--statements",
                                       "unknown statement id '" + s + "'");
    return out;
}

CorpusItem instance_item(const std::string& spec_text, const Caps& caps) {
    auto node = parse_spec(spec_text);
    if (node.kind != SpecNode::Kind::Amalgam &&
        node.kind != SpecNode::Kind::Duplication)
        throw CLI::ValidationError(
            "--instance", "instance must be an amalgam or duplication spec");
    eval_spec(node, caps);  // surfaces semantic errors before the campaign
    CorpusItem item;
    item.spec = print_spec(node);
    item.id = "instance:" + item.spec;
    item.kind = CorpusItem::Kind::Amalgam;
    item.is_duplication = node.kind == SpecNode::Kind::Duplication;
    return item;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite commutative ring workbench: amalgamated algebras, "
                 "self-injectivity and quasi-Frobenius checks"};
    app.require_subcommand(1);

    std::string spec_text, what, report_path, format = "json";
    std::string statements = "all", only, instance;
    bool as_json = false, serial = false;
    CorpusCaps corpus_caps;

    auto* check = app.add_subcommand("check", "evaluate one predicate on a ring spec");
    check->add_option("what", what, "self-injective | qf | local | idempotents | ideals")
        ->required();
    check->add_option("spec", spec_text, "ring spec, e.g. \"duplication(zmod(6), ideal(2))\"")
        ->required();
    check->add_flag("--json", as_json, "machine-readable output");

    auto* ideals_cmd = app.add_subcommand("ideals", "list the ideal lattice of a ring spec");
    ideals_cmd->add_option("spec", spec_text, "ring spec")->required();
    ideals_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* census_cmd = app.add_subcommand("census", "list the corpus items a campaign would run");
    census_cmd->add_option("--max-order", corpus_caps.max_ring_order, "largest Z_n in the corpus");
    census_cmd->add_option("--max-product-order", corpus_caps.max_product_order,
                           "largest two-factor product order");
    census_cmd->add_option("--max-amalgam-order", corpus_caps.max_amalgam_order,
                           "largest |A|*|J| for amalgamation data");
    census_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "run verification campaigns over the corpus");
    verify->add_option("--max-order", corpus_caps.max_ring_order, "largest Z_n in the corpus");
    verify->add_option("--max-product-order", corpus_caps.max_product_order,
                       "largest two-factor product order");
    verify->add_option("--max-amalgam-order", corpus_caps.max_amalgam_order,
                       "largest |A|*|J| for amalgamation data");
    verify->add_option("--statements", statements, "comma-separated statement ids, or 'all'");
    verify->add_option("--only", only, "run a single statement id");
    verify->add_option("--instance", instance, "verify one amalgam/duplication spec instead of the corpus");
    verify->add_option("--report", report_path, "write the campaign report to this path");
    verify->add_option("--format", format, "report format: json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_flag("--serial", serial, "use the serial reference campaign runner");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        const Caps caps = caps_from_env();

        if (check->parsed()) return run_check(what, spec_text, as_json, caps);
        if (ideals_cmd->parsed())
            return run_check("ideals", spec_text, as_json, caps);

        if (census_cmd->parsed()) {
            auto corpus = generate_corpus(corpus_caps, caps);
            if (as_json) {
                Json items = Json::array();
                for (const auto& item : corpus)
                    items.push_back(Json{{"id", item.id}, {"tags", item.tags}});
                std::cout << Json{{"count", corpus.size()}, {"items", items}}.dump(2)
                          << '\n';
            } else {
                for (const auto& item : corpus) {
                    std::cout << item.id;
                    if (!item.tags.empty()) {
                        std::cout << "  [";
                        for (size_t i = 0; i < item.tags.size(); ++i)
                            std::cout << (i ? " " : "") << item.tags[i];
                        std::cout << "]";
                    }
                    std::cout << '\n';
                }
                std::cout << corpus.size() << " items\n";
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            auto ids = resolve_statements(statements, only);
            std::vector<CorpusItem> corpus;
            if (!instance.empty())
                corpus.push_back(instance_item(instance, caps));
            else
                corpus = generate_corpus(corpus_caps, caps);

            CampaignReport report = serial
                                        ? run_campaign_serial(corpus, ids, caps)
                                        : run_campaign(corpus, ids, caps);

            if (!report_path.empty()) {
                if (format == "json")
                    write_report_json(report, report_path);
                else
                    write_report_csv(report, report_path);
            }
            std::cout << "evaluated " << report.summary.evaluated
                      << " (applicable " << report.summary.applicable
                      << ", consistent " << report.summary.consistent
                      << ", inconsistent " << report.summary.inconsistent
                      << ", inapplicable " << report.summary.inapplicable
                      << ", resource-limited " << report.summary.resource_limited
                      << ")\n";
            for (const auto& row : report.rows)
                if (row.outcome == Outcome::Inconsistent)
                    std::cout << "COUNTEREXAMPLE " << row.item_id << " "
                              << row.statement_id << " "
                              << to_json(row.verdict)["witness"].dump() << '\n';
            return campaign_exit_code(report);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;  // EX_SOFTWARE
    }
    return kExitUsage;
}
