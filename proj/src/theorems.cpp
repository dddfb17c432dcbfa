#include "amalgam/theorems.hpp"

#include <algorithm>
#include <map>

namespace amalgam {

namespace {

Json ideal_json(const Ideal& i) { return Json(i.elements()); }

bool j_inside_image(const Amalgam& w) {
    std::vector<char> image(w.b_ring->order(), 0);
    for (Elem y : w.hom.map) image[y] = 1;
    for (Elem j : w.j_ideal.elements())
        if (!image[j]) return false;
    return true;
}

// Evaluates hypotheses in order, stopping at the first failure.
struct HypothesisChain {
    Verdict& v;
    bool pass = true;

    template <typename Fn>
    void check(const std::string& name, Fn&& fn) {
        if (!pass) return;
        const bool h = fn();
        v.hypotheses.push_back({name, h});
        pass = pass && h;
    }

    bool applicable() {
        v.applicable = pass;
        return pass;
    }
};

// J and Ann_B(J) as A-modules through f, and their direct sum.
struct SummandModules {
    ModulePtr j_over_a;
    ModulePtr ann_over_a;
    ModulePtr sum;
};

SummandModules j_plus_ann_over_a(const Amalgam& w) {
    auto jm = restrict_scalars(module_from_ideal(w.b_ring, w.j_ideal), w.hom);
    auto ann = annihilator(w.b_ring, w.j_ideal.elements());
    auto am = restrict_scalars(module_from_ideal(w.b_ring, ann), w.hom);
    auto sum = direct_sum(jm, am);
    return {std::move(jm), std::move(am), std::move(sum)};
}

// Hom_W(A, W) where A is a W-module through the modulation map.
HomObject hom_w_a_w(const Amalgam& w, const Caps& caps) {
    auto a_over_w = restrict_scalars(ring_as_module(w.a_ring), modulation_map(w));
    return hom_object(a_over_w, ring_as_module(w.ring), caps);
}

// The set of A-linear maps W -> D as a module over W itself, with scalar
// action by precomposition: (w0.h)(x) = h(w0*x).
ModulePtr hom_set_as_w_module(const Amalgam& w, const ModulePtr& w_over_a,
                              const ModulePtr& d, const Caps& caps) {
    auto homs = enumerate_module_homs(w_over_a, d, caps);
    const int h = (int)homs.size();
    std::map<std::vector<Elem>, int> index;
    for (int i = 0; i < h; ++i) index[homs[i].map] = i;
    auto index_of = [&](const std::vector<Elem>& m) {
        auto it = index.find(m);
        if (it == index.end())
            throw std::logic_error("hom_set_as_w_module: set not closed");
        return it->second;
    };

    const int n = w_over_a->order();  // == |W|
    const RingPtr& ring = w.ring;
    std::vector<Elem> add((size_t)h * h), act((size_t)ring->order() * h);
    std::vector<Elem> tmp(n);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            for (int x = 0; x < n; ++x)
                tmp[x] = d->add(homs[i].map[x], homs[j].map[x]);
            add[(size_t)i * h + j] = index_of(tmp);
        }
    for (Elem w0 = 0; w0 < ring->order(); ++w0)
        for (int i = 0; i < h; ++i) {
            for (int x = 0; x < n; ++x)
                tmp[x] = homs[i].map[ring->mul(w0, x)];
            act[(size_t)w0 * h + i] = index_of(tmp);
        }
    const Elem zero = index_of(std::vector<Elem>(n, d->zero()));
    return FModule::create(ring, h, std::move(add), zero, std::move(act),
                           "Hom_A(W, J+Ann) over W");
}

Json iso_witness(const ModuleHom& h) {
    return Json{{"kind", "module-iso"}, {"map", h.map}};
}

Json mismatch_witness(const Json& detail) {
    Json j = detail;
    j["kind"] = "mismatch";
    return j;
}

}  // namespace

Json to_json(const Verdict& v) {
    Json hyps = Json::array();
    for (const auto& h : v.hypotheses)
        hyps.push_back({{"name", h.name}, {"holds", h.holds}});
    Json j{{"statement_id", v.statement_id},
           {"hypotheses", hyps},
           {"applicable", v.applicable},
           {"consistent", v.consistent},
           {"witness", v.witness},
           {"notes", v.notes}};
    j["lhs"] = v.lhs ? Json(*v.lhs) : Json();
    j["rhs"] = v.rhs ? Json(*v.rhs) : Json();
    return j;
}

Verdict verify_prop_hom_iso(const Amalgam& w, const Caps& caps) {
    Verdict v{.statement_id = "prop-hom-iso"};
    HypothesisChain hyp{v};
    hyp.check("f-injective", [&] { return is_injective_hom(w.hom); });
    hyp.check("J-subset-fA", [&] { return j_inside_image(w); });
    if (!hyp.applicable()) return v;

    auto homs = hom_w_a_w(w, caps);
    auto lhs_module = restrict_scalars(homs.module, inclusion_hom(w));
    auto rhs_module = j_plus_ann_over_a(w).sum;

    auto iso = module_isomorphic(lhs_module, rhs_module, caps);
    v.lhs = true;
    v.rhs = true;
    v.consistent = iso.has_value();
    if (iso)
        v.witness = iso_witness(*iso);
    else
        v.witness = mismatch_witness(
            {{"hom_module_order", lhs_module->order()},
             {"sum_module_order", rhs_module->order()}});
    return v;
}

Verdict verify_prop_dual_iso(const Amalgam& w, const Caps& caps) {
    Verdict v{.statement_id = "prop-dual-iso"};
    HypothesisChain hyp{v};
    hyp.check("f-injective", [&] { return is_injective_hom(w.hom); });
    hyp.check("J-subset-fA", [&] { return j_inside_image(w); });
    hyp.check("pi-splits", [&] {
        auto pi = multiplication_map(w.b_ring, w.j_ideal, caps);
        return find_section(pi.map, caps).has_value();
    });
    hyp.check("hom-J-annJ-zero", [&] {
        auto jm = module_from_ideal(w.b_ring, w.j_ideal);
        auto ann = annihilator(w.b_ring, w.j_ideal.elements());
        auto am = module_from_ideal(w.b_ring, ann);
        return hom_object(jm, am, caps).module->order() == 1;
    });
    if (!hyp.applicable()) return v;

    auto w_over_a = restrict_scalars(ring_as_module(w.ring), inclusion_hom(w));
    auto d = j_plus_ann_over_a(w).sum;
    auto hom_module = hom_set_as_w_module(w, w_over_a, d, caps);

    auto iso = module_isomorphic(hom_module, ring_as_module(w.ring), caps);
    v.lhs = true;
    v.rhs = true;
    v.consistent = iso.has_value();
    if (iso)
        v.witness = iso_witness(*iso);
    else
        v.witness = mismatch_witness({{"hom_module_order", hom_module->order()},
                                      {"amalgam_order", w.ring->order()}});
    return v;
}

Verdict verify_remark_idempotent(const RingPtr& b, Elem e, const Caps& caps) {
    Verdict v{.statement_id = "remark-idempotent"};
    HypothesisChain hyp{v};
    hyp.check("e-idempotent", [&] { return b->is_idempotent(e); });
    hyp.check("e-nonzero", [&] { return e != b->zero(); });
    if (!hyp.applicable()) return v;

    Ideal j = ideal_generated(b, {e});
    auto pi = multiplication_map(b, j, caps);
    auto section = find_section(pi.map, caps);

    auto ann = annihilator(b, j.elements());
    auto homs = hom_object(module_from_ideal(b, j), module_from_ideal(b, ann),
                           caps);
    const bool hom_zero = homs.module->order() == 1;

    v.lhs = section.has_value();
    v.rhs = hom_zero;
    v.consistent = section.has_value() && hom_zero;
    if (v.consistent)
        v.witness = Json{{"kind", "section"},
                         {"e", e},
                         {"J", ideal_json(j)},
                         {"section_map", section->section.map}};
    else
        v.witness = mismatch_witness({{"e", e},
                                      {"section_found", section.has_value()},
                                      {"hom_J_annJ_order", homs.module->order()}});
    return v;
}

Verdict verify_selfinjective_characterization(const Amalgam& w,
                                              const Caps& caps) {
    Verdict v{.statement_id = "thm-selfinj-char"};
    HypothesisChain hyp{v};
    hyp.check("f-injective", [&] { return is_injective_hom(w.hom); });
    hyp.check("J-subset-fA", [&] { return j_inside_image(w); });
    if (!hyp.applicable()) return v;

    auto self_inj = self_injectivity(w.ring, caps);
    const bool b_injective = is_injective_module(module_via_hom(w.hom), caps);
    auto e = idempotent_generator(w.b_ring, w.j_ideal);

    v.lhs = self_inj.value;
    v.rhs = b_injective && e.has_value();
    v.consistent = (*v.lhs == *v.rhs);
    if (v.consistent && e)
        v.witness = Json{{"kind", "idempotent"}, {"e", *e}};
    else if (v.consistent && self_inj.failing_ideal)
        v.witness = Json{{"kind", "double-annihilator-failure"},
                         {"ideal", ideal_json(*self_inj.failing_ideal)},
                         {"ann_ann", ideal_json(annihilator(
                                         annihilator(*self_inj.failing_ideal)))}};
    else if (!v.consistent)
        v.witness = mismatch_witness(
            {{"self_injective", self_inj.value},
             {"b_injective_over_a", b_injective},
             {"idempotent_generator", e ? Json(*e) : Json()},
             {"failing_ideal", self_inj.failing_ideal
                                   ? ideal_json(*self_inj.failing_ideal)
                                   : Json()}});
    return v;
}

Verdict verify_local_never(const Amalgam& w, const Caps& caps) {
    Verdict v{.statement_id = "cor-local-never"};
    HypothesisChain hyp{v};
    hyp.check("f-injective", [&] { return is_injective_hom(w.hom); });
    hyp.check("J-subset-fA", [&] { return j_inside_image(w); });
    hyp.check("B-local", [&] {
        return w.b_ring->order() >= 2 && is_local(w.b_ring, caps);
    });
    hyp.check("J-nonzero", [&] { return !w.j_ideal.is_zero(); });
    hyp.check("J-proper", [&] { return !w.j_ideal.is_whole_ring(); });
    if (!hyp.applicable()) return v;

    auto self_inj = self_injectivity(w.ring, caps);
    v.lhs = self_inj.value;
    v.consistent = !self_inj.value;
    if (self_inj.failing_ideal)
        v.witness = Json{{"kind", "double-annihilator-failure"},
                         {"ideal", ideal_json(*self_inj.failing_ideal)}};
    else
        v.witness = mismatch_witness({{"self_injective", self_inj.value}});
    return v;
}

Verdict verify_duplication(const RingPtr& a, const Ideal& i, const Caps& caps) {
    Verdict v{.statement_id = "cor-duplication"};
    v.applicable = true;

    auto dup = duplication(a, i, caps);
    const bool dup_self_inj = is_self_injective(dup.ring, caps);
    const bool a_self_inj = is_self_injective(a, caps);
    auto e = idempotent_generator(a, i);

    v.lhs = dup_self_inj;
    v.rhs = a_self_inj && e.has_value();
    v.consistent = (*v.lhs == *v.rhs);
    if (e)
        v.witness = Json{{"kind", "idempotent"}, {"e", *e}};
    if (!v.consistent)
        v.witness = mismatch_witness({{"duplication_self_injective", dup_self_inj},
                                      {"base_self_injective", a_self_inj},
                                      {"idempotent_generator", e ? Json(*e) : Json()}});
    return v;
}

Verdict verify_qf_characterization(const Amalgam& w, const Caps& caps) {
    Verdict v{.statement_id = "thm-qf-char"};
    HypothesisChain hyp{v};
    hyp.check("f-injective", [&] { return is_injective_hom(w.hom); });
    hyp.check("J-subset-fA", [&] { return j_inside_image(w); });
    if (!hyp.applicable()) return v;

    const bool w_qf = is_quasi_frobenius(w.ring, caps);
    const bool a_qf = is_quasi_frobenius(w.a_ring, caps);
    const bool b_injective = is_injective_module(module_via_hom(w.hom), caps);
    auto e = idempotent_generator(w.b_ring, w.j_ideal);
    auto sub = image_plus_j_subring(w);
    v.notes.push_back("f(A)+J Noetherian: trivially true (finite, order " +
                      std::to_string(sub.ring->order()) + ")");

    v.lhs = w_qf;
    v.rhs = a_qf && b_injective && e.has_value();
    v.consistent = (*v.lhs == *v.rhs);
    if (v.consistent && e)
        v.witness = Json{{"kind", "idempotent"}, {"e", *e}};
    if (!v.consistent)
        v.witness = mismatch_witness({{"amalgam_qf", w_qf},
                                      {"base_qf", a_qf},
                                      {"b_injective_over_a", b_injective},
                                      {"idempotent_generator", e ? Json(*e) : Json()}});
    return v;
}

Verdict verify_product_qf(const std::vector<RingPtr>& factors,
                          const Caps& caps) {
    if (factors.empty())
        throw InvalidParameter("verify_product_qf: empty factor list");
    Verdict v{.statement_id = "lem-product-qf"};
    v.applicable = true;

    RingPtr product = factors[0];
    for (size_t i = 1; i < factors.size(); ++i)
        product = make_product(product, factors[i]).ring;

    const bool product_qf = is_quasi_frobenius(product, caps);
    bool all_qf = true;
    Json factor_qf = Json::array();
    for (const auto& f : factors) {
        const bool q = is_quasi_frobenius(f, caps);
        factor_qf.push_back(q);
        all_qf = all_qf && q;
    }
    v.lhs = product_qf;
    v.rhs = all_qf;
    v.consistent = (product_qf == all_qf);
    v.witness = Json{{"kind", "product-qf"},
                     {"product_order", product->order()},
                     {"factors_qf", factor_qf}};
    if (!v.consistent) v.witness["kind"] = "mismatch";
    return v;
}

Verdict verify_descent_qf(const Amalgam& w, const Caps& caps) {
    Verdict v{.statement_id = "lem-descent-qf"};
    v.applicable = true;  // the descent lemma carries no side conditions

    const bool w_qf = is_quasi_frobenius(w.ring, caps);
    v.lhs = w_qf;
    if (!w_qf) {
        v.consistent = true;  // vacuous
        v.notes.push_back("antecedent false; implication vacuously holds");
        return v;
    }
    const bool a_qf = is_quasi_frobenius(w.a_ring, caps);
    v.rhs = a_qf;
    v.consistent = a_qf;
    if (!v.consistent) {
        auto failing = self_injectivity(w.a_ring, caps).failing_ideal;
        v.witness = mismatch_witness(
            {{"amalgam_qf", true},
             {"base_qf", false},
             {"failing_ideal", failing ? ideal_json(*failing) : Json()}});
    }
    return v;
}

Verdict verify_hom_iso_surjective_case(const Amalgam& w, const Caps& caps) {
    Verdict v{.statement_id = "lem-hom-iso-surjective"};
    HypothesisChain hyp{v};
    hyp.check("f-surjective", [&] { return is_surjective_hom(w.hom); });
    hyp.check("annB-J-zero", [&] {
        return annihilator(w.b_ring, w.j_ideal.elements()).is_zero();
    });
    if (!hyp.applicable()) return v;

    auto j_over_a = restrict_scalars(module_from_ideal(w.b_ring, w.j_ideal),
                                     w.hom);
    auto homs = hom_w_a_w(w, caps);
    auto hom_over_a = restrict_scalars(homs.module, inclusion_hom(w));

    auto iso = module_isomorphic(j_over_a, hom_over_a, caps);
    v.lhs = true;
    v.rhs = true;
    v.consistent = iso.has_value();
    if (iso)
        v.witness = iso_witness(*iso);
    else
        v.witness = mismatch_witness({{"j_order", j_over_a->order()},
                                      {"hom_module_order", hom_over_a->order()}});
    return v;
}

Verdict verify_local_surjective_qf(const Amalgam& w, const Caps& caps) {
    Verdict v{.statement_id = "prop-local-surjective-qf"};
    v.notes.push_back(
        "clause 'J = A' read as J = B (f surjective makes f(A) = B)");
    HypothesisChain hyp{v};
    hyp.check("A-local", [&] {
        return w.a_ring->order() >= 2 && is_local(w.a_ring, caps);
    });
    hyp.check("f-surjective", [&] { return is_surjective_hom(w.hom); });
    hyp.check("J-nonzero", [&] { return !w.j_ideal.is_zero(); });
    hyp.check("annB-J-zero", [&] {
        return annihilator(w.b_ring, w.j_ideal.elements()).is_zero();
    });
    if (!hyp.applicable()) return v;

    const bool w_qf = is_quasi_frobenius(w.ring, caps);
    const bool a_qf = is_quasi_frobenius(w.a_ring, caps);
    const bool j_full = w.j_ideal.is_whole_ring();

    v.lhs = w_qf;
    v.rhs = a_qf && j_full;
    v.consistent = (*v.lhs == *v.rhs);
    v.witness = Json{{"kind", "local-surjective-qf"},
                     {"amalgam_qf", w_qf},
                     {"base_qf", a_qf},
                     {"J_is_whole_B", j_full}};
    if (!v.consistent) v.witness["kind"] = "mismatch";
    return v;
}

}  // namespace amalgam
