#ifndef AMALGAM_MODULE_HPP
#define AMALGAM_MODULE_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "amalgam/ideal.hpp"
#include "amalgam/ring.hpp"

namespace amalgam {

class FModule;
using ModulePtr = std::shared_ptr<const FModule>;

/// A finite module over a FiniteRing: additive table plus scalar-action
/// table, both validated exhaustively at construction.
class FModule {
public:
    static ModulePtr create(RingPtr ring, int order, std::vector<Elem> add,
                            Elem zero, std::vector<Elem> action,
                            std::string label);

    const RingPtr& ring() const { return ring_; }
    int order() const { return order_; }
    Elem zero() const { return zero_; }
    const std::string& label() const { return label_; }

    Elem add(Elem m, Elem n) const { return add_[m * order_ + n]; }
    Elem neg(Elem m) const { return neg_[m]; }
    /// Scalar action r.m; r indexes the ring, m the module.
    Elem act(Elem r, Elem m) const { return act_[r * order_ + m]; }

    /// Least k >= 1 with k*m = 0.
    int additive_order(Elem m) const;

    /// Structural equality: same ring tables, same addition and action.
    bool same_structure(const FModule& other) const;

private:
    FModule() = default;
    RingPtr ring_;
    int order_ = 0;
    std::vector<Elem> add_;
    Elem zero_ = 0;
    std::vector<Elem> act_;
    std::vector<Elem> neg_;
    std::string label_;
};

/// An additive, action-equivariant map between modules over the same ring,
/// stored element-wise on domain indices.
struct ModuleHom {
    ModulePtr domain;
    ModulePtr codomain;
    std::vector<Elem> map;

    Elem operator()(Elem m) const { return map[m]; }

    friend bool operator==(const ModuleHom& a, const ModuleHom& b) {
        return a.domain.get() == b.domain.get() &&
               a.codomain.get() == b.codomain.get() && a.map == b.map;
    }
};

/// Validates linearity exhaustively; throws ValidationError with a witness.
ModuleHom make_module_hom(ModulePtr domain, ModulePtr codomain,
                          std::vector<Elem> map);

bool is_bijective(const ModuleHom& h);
bool is_surjective(const ModuleHom& h);
ModuleHom compose(const ModuleHom& g, const ModuleHom& f);
ModuleHom identity_module_hom(const ModulePtr& m);

struct SplitWitness {
    ModuleHom section;  // s . section = identity on the target
};

/// An ideal I of R as an R-module; module index k corresponds to ring
/// element I.elements()[k].
ModulePtr module_from_ideal(const RingPtr& r, const Ideal& i);

/// The codomain of f as a module over the domain: a.b := f(a)*b.
ModulePtr module_via_hom(const RingHom& f);

/// Same underlying group as m, action r.x := h(r).x for h: R -> S.
ModulePtr restrict_scalars(const ModulePtr& m, const RingHom& h);

/// R as a module over itself.
ModulePtr ring_as_module(const RingPtr& r);

/// Componentwise structure on pairs, row-major coding (m*|N| + n).
ModulePtr direct_sum(const ModulePtr& m, const ModulePtr& n);

/// All R-linear maps M -> N, enumerated from a greedy minimal additive
/// generating sequence of M with additive-order divisibility pruning.
/// Every candidate is accepted only after an exhaustive well-definedness and
/// equivariance check. Results are sorted by map vector.
std::vector<ModuleHom> enumerate_module_homs(const ModulePtr& m,
                                             const ModulePtr& n,
                                             const Caps& caps = {});

/// Hom(M, N) materialized as an R-module under pointwise addition and
/// (r.h)(x) = r.h(x); homs[k] is the hom with module index k.
struct HomObject {
    ModulePtr module;
    std::vector<ModuleHom> homs;
};

HomObject hom_object(const ModulePtr& m, const ModulePtr& n,
                     const Caps& caps = {});

/// The canonical multiplication map pi: B -> Hom_B(J, J), b |-> (j |-> bj),
/// as a ModuleHom from B-over-itself into hom_object(J, J). Its kernel is
/// asserted to be ann_B(J).
struct MultiplicationMap {
    ModuleHom map;
    HomObject target;
    Ideal kernel;
};

MultiplicationMap multiplication_map(const RingPtr& b, const Ideal& j,
                                     const Caps& caps = {});

/// A right inverse of a surjective hom, found by searching the reverse hom
/// set; absent when no section exists.
std::optional<SplitWitness> find_section(const ModuleHom& s,
                                         const Caps& caps = {});

/// Baer's criterion, specialized to finite rings: M is injective iff every
/// linear map from an ideal of R into M is multiplication by some fixed m.
struct BaerResult {
    bool injective = false;
    /// On failure: the ideal and the map with no multiplication extension.
    std::optional<std::pair<Ideal, ModuleHom>> failure;
};

BaerResult baer_injectivity(const ModulePtr& m, const Caps& caps = {});
bool is_injective_module(const ModulePtr& m, const Caps& caps = {});

/// Double-annihilator criterion: Ann(Ann(I)) = I for every ideal I.
/// Cross-checked against the Baer decision for orders within
/// caps.baer_cross_check; the two must agree on finite commutative rings.
struct SelfInjectivity {
    bool value = false;
    std::optional<Ideal> failing_ideal;  // Ann(Ann(I)) != I witness
};

SelfInjectivity self_injectivity(const RingPtr& r, const Caps& caps = {});
bool is_self_injective(const RingPtr& r, const Caps& caps = {});
/// Identical decision for finite rings (finite => Noetherian and Artinian).
bool is_quasi_frobenius(const RingPtr& r, const Caps& caps = {});

/// A bijective R-linear map M -> N if one exists. Prunes by order, additive
/// order multiset and per-element annihilator sizes before searching.
std::optional<ModuleHom> module_isomorphic(const ModulePtr& m,
                                           const ModulePtr& n,
                                           const Caps& caps = {});

}  // namespace amalgam

#endif
