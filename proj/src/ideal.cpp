#include "amalgam/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace amalgam {

namespace {

std::vector<Elem> mask_to_sorted(const std::vector<char>& mask) {
    std::vector<Elem> out;
    for (Elem x = 0; x < (int)mask.size(); ++x)
        if (mask[x]) out.push_back(x);
    return out;
}

// Closure of a seed set under addition and multiplication by ring elements:
// fixpoint of S -> S + S, R * S.
std::vector<Elem> ideal_closure(const RingPtr& r, const std::vector<Elem>& seed) {
    const int n = r->order();
    std::vector<char> in(n, 0);
    in[r->zero()] = 1;
    for (Elem g : seed) in[g] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        auto cur = mask_to_sorted(in);
        for (Elem x : cur) {
            for (Elem y : cur)
                if (!in[r->add(x, y)]) {
                    in[r->add(x, y)] = 1;
                    grew = true;
                }
            for (Elem a = 0; a < n; ++a)
                if (!in[r->mul(a, x)]) {
                    in[r->mul(a, x)] = 1;
                    grew = true;
                }
        }
    }
    return mask_to_sorted(in);
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Elem> sorted_elements)
    : ring_(std::move(ring)), elems_(std::move(sorted_elements)) {
    mask_.assign(ring_->order(), 0);
    for (Elem x : elems_) {
        if (x < 0 || x >= ring_->order())
            throw InvalidParameter("Ideal: element index out of range");
        mask_[x] = 1;
    }
    if (!std::is_sorted(elems_.begin(), elems_.end()))
        throw InvalidParameter("Ideal: element list must be sorted");
    if (!is_ideal(ring_, elems_))
        throw InvalidParameter("Ideal: set is not an ideal of its ring");
}

bool is_ideal(const RingPtr& r, const std::vector<Elem>& sorted) {
    std::vector<char> in(r->order(), 0);
    for (Elem x : sorted) {
        if (x < 0 || x >= r->order()) return false;
        in[x] = 1;
    }
    if (!in[r->zero()]) return false;
    for (Elem x : sorted) {
        for (Elem y : sorted)
            if (!in[r->add(x, y)]) return false;
        for (Elem a = 0; a < r->order(); ++a)
            if (!in[r->mul(a, x)]) return false;
    }
    return true;
}

Ideal ideal_generated(const RingPtr& r, const std::vector<Elem>& gens) {
    for (Elem g : gens)
        if (g < 0 || g >= r->order())
            throw InvalidParameter("ideal_generated: generator out of range");
    return Ideal(r, ideal_closure(r, gens));
}

Ideal annihilator(const RingPtr& r, const std::vector<Elem>& s) {
    std::vector<Elem> out;
    for (Elem x = 0; x < r->order(); ++x) {
        bool kills = true;
        for (Elem y : s)
            if (r->mul(x, y) != r->zero()) {
                kills = false;
                break;
            }
        if (kills) out.push_back(x);
    }
    return Ideal(r, std::move(out));
}

Ideal annihilator(const Ideal& i) { return annihilator(i.ring(), i.elements()); }

Ideal ideal_sum(const Ideal& i, const Ideal& k) {
    require_same_ring(i.ring(), k.ring(), "ideal_sum");
    const RingPtr& r = i.ring();
    std::vector<char> in(r->order(), 0);
    for (Elem x : i.elements())
        for (Elem y : k.elements()) in[r->add(x, y)] = 1;
    return Ideal(r, mask_to_sorted(in));
}

Ideal ideal_intersection(const Ideal& i, const Ideal& k) {
    require_same_ring(i.ring(), k.ring(), "ideal_intersection");
    std::vector<Elem> out;
    for (Elem x : i.elements())
        if (k.contains(x)) out.push_back(x);
    return Ideal(i.ring(), std::move(out));
}

Ideal ideal_product(const Ideal& i, const Ideal& k) {
    require_same_ring(i.ring(), k.ring(), "ideal_product");
    std::vector<Elem> gens;
    for (Elem x : i.elements())
        for (Elem y : k.elements()) gens.push_back(i.ring()->mul(x, y));
    return ideal_generated(i.ring(), gens);
}

std::vector<Ideal> all_ideals(const RingPtr& r, const Caps& caps) {
    // Closure of the principal ideals under pairwise sums.
    std::set<std::vector<Elem>> seen;
    std::vector<std::vector<Elem>> worklist;
    auto push = [&](std::vector<Elem> v) {
        if (seen.insert(v).second) {
            if ((int)seen.size() > caps.ideal_lattice)
                throw ResourceLimitError("all_ideals: lattice cap exceeded");
            worklist.push_back(std::move(v));
        }
    };
    for (Elem x = 0; x < r->order(); ++x)
        push(ideal_closure(r, {x}));
    for (size_t i = 0; i < worklist.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            const auto &a = worklist[i], &b = worklist[j];
            std::vector<char> in(r->order(), 0);
            for (Elem x : a)
                for (Elem y : b) in[r->add(x, y)] = 1;
            push(mask_to_sorted(in));
        }

    std::vector<Ideal> out;
    out.reserve(seen.size());
    for (const auto& v : seen) out.emplace_back(r, v);
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.elements() < b.elements();
    });
    return out;
}

std::optional<Elem> idempotent_generator(const RingPtr& r, const Ideal& j) {
    require_same_ring(r, j.ring(), "idempotent_generator");
    for (Elem e = 0; e < r->order(); ++e) {
        if (!r->is_idempotent(e)) continue;
        std::vector<char> in(r->order(), 0);
        for (Elem a = 0; a < r->order(); ++a) in[r->mul(e, a)] = 1;
        if (mask_to_sorted(in) == j.elements()) return e;
    }
    return std::nullopt;
}

bool is_regular_element(const RingPtr& r, Elem z) {
    bool regular = true;
    for (Elem x = 0; x < r->order(); ++x)
        if (x != r->zero() && r->mul(z, x) == r->zero()) {
            regular = false;
            break;
        }
    // Finite commutative: regular <=> unit (multiplication by z is injective
    // iff surjective on a finite set).
    if (regular != r->is_unit(z))
        throw std::logic_error("is_regular_element: unit equivalence violated");
    return regular;
}

std::vector<Ideal> maximal_ideals(const RingPtr& r, const Caps& caps) {
    if (r->order() < 2)
        throw InvalidParameter("maximal_ideals: undefined for the order-1 ring");
    auto lattice = all_ideals(r, caps);
    std::vector<Ideal> proper;
    for (auto& i : lattice)
        if (!i.is_whole_ring()) proper.push_back(i);
    std::vector<Ideal> out;
    for (const auto& i : proper) {
        bool maximal = true;
        for (const auto& k : proper) {
            if (&i == &k || k.size() <= i.size()) continue;
            bool contained = true;
            for (Elem x : i.elements())
                if (!k.contains(x)) {
                    contained = false;
                    break;
                }
            if (contained) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(i);
    }
    return out;
}

bool is_local(const RingPtr& r, const Caps& caps) {
    if (r->order() < 2)
        throw InvalidParameter("is_local: undefined for the order-1 ring");
    bool by_lattice = maximal_ideals(r, caps).size() == 1;
    std::vector<Elem> trivial{r->zero(), r->one()};
    std::sort(trivial.begin(), trivial.end());
    bool by_idempotents = idempotents(r) == trivial;
    if (by_lattice != by_idempotents)
        throw std::logic_error("is_local: lattice and idempotent criteria disagree");
    return by_lattice;
}

QuotientRing quotient_ring(const RingPtr& r, const Ideal& i) {
    require_same_ring(r, i.ring(), "quotient_ring");
    const int n = r->order();
    // Least element index per coset.
    std::vector<Elem> rep(n, -1);
    for (Elem x = 0; x < n; ++x) {
        if (rep[x] >= 0) continue;
        Elem least = x;
        std::vector<Elem> coset;
        for (Elem j : i.elements()) coset.push_back(r->add(x, j));
        for (Elem y : coset) least = std::min(least, y);
        for (Elem y : coset) rep[y] = least;
    }
    std::vector<Elem> reps;
    for (Elem x = 0; x < n; ++x)
        if (rep[x] == x) reps.push_back(x);
    std::vector<Elem> index_of(n, -1);
    for (int k = 0; k < (int)reps.size(); ++k) index_of[reps[k]] = k;

    const int m = (int)reps.size();
    RingTables t;
    t.order = m;
    t.add.resize((size_t)m * m);
    t.mul.resize((size_t)m * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            t.add[(size_t)a * m + b] = index_of[rep[r->add(reps[a], reps[b])]];
            t.mul[(size_t)a * m + b] = index_of[rep[r->mul(reps[a], reps[b])]];
        }
    t.zero = index_of[rep[r->zero()]];
    t.one = index_of[rep[r->one()]];
    t.label = "quotient(" + r->label() + ", " + std::to_string(i.size()) + ")";
    RingPtr q = FiniteRing::from_tables(std::move(t));

    std::vector<Elem> proj(n);
    for (Elem x = 0; x < n; ++x) proj[x] = index_of[rep[x]];
    return QuotientRing{q, make_hom(r, q, std::move(proj))};
}

Ideal preimage_ideal(const RingHom& f, const Ideal& j) {
    require_same_ring(f.codomain, j.ring(), "preimage_ideal");
    std::vector<Elem> out;
    for (Elem x = 0; x < f.domain->order(); ++x)
        if (j.contains(f.map[x])) out.push_back(x);
    return Ideal(f.domain, std::move(out));
}

}  // namespace amalgam
