#include "amalgam/amalgam_ring.hpp"

#include <algorithm>
#include <map>

namespace amalgam {

Amalgam amalgamate(const RingPtr& a, const RingPtr& b, const RingHom& f,
                   const Ideal& j, const Caps& caps) {
    if (!same_ring(f.domain, a) || !same_ring(f.codomain, b))
        throw InvalidParameter("amalgamate: hom endpoints must be A and B");
    require_same_ring(b, j.ring(), "amalgamate");

    const int na = a->order(), nj = j.size();
    const long long order = (long long)na * nj;
    if (order > caps.amalgam_order)
        throw ResourceLimitError("amalgamate: order " + std::to_string(order) +
                                 " exceeds cap " +
                                 std::to_string(caps.amalgam_order));
    const int n = (int)order;

    const auto& jelems = j.elements();
    std::vector<int> jpos(b->order(), -1);
    for (int k = 0; k < nj; ++k) jpos[jelems[k]] = k;

    std::vector<std::pair<Elem, Elem>> decode(n);
    for (Elem x = 0; x < na; ++x)
        for (int k = 0; k < nj; ++k)
            decode[x * nj + k] = {x, b->add(f.map[x], jelems[k])};

    // (a1,b1) op (a2,b2) = (a1 op a2, b1 op b2); the b-part stays in the set
    // because J is an ideal, so b - f(a) is recoverable and indexes the pair.
    auto index_of = [&](Elem ax, Elem bx) {
        const int k = jpos[b->sub(bx, f.map[ax])];
        if (k < 0) throw std::logic_error("amalgamate: pair escaped the subring");
        return ax * nj + k;
    };

    RingTables t;
    t.order = n;
    t.add.resize((size_t)n * n);
    t.mul.resize((size_t)n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto [ax, bx] = decode[x];
            const auto [ay, by] = decode[y];
            t.add[(size_t)x * n + y] = index_of(a->add(ax, ay), b->add(bx, by));
            t.mul[(size_t)x * n + y] = index_of(a->mul(ax, ay), b->mul(bx, by));
        }
    t.zero = index_of(a->zero(), b->zero());
    t.one = index_of(a->one(), b->one());
    t.label = "amalgam(" + a->label() + ", " + b->label() + ")";
    RingPtr ring = FiniteRing::from_tables(std::move(t));

    // decode is injective by construction: j = b - f(a) determines the index.
    return Amalgam{std::move(ring), a, b, f, j, std::move(decode)};
}

Amalgam duplication(const RingPtr& a, const Ideal& i, const Caps& caps) {
    auto w = amalgamate(a, a, identity_hom(a), i, caps);
    w.ring = FiniteRing::from_tables([&] {
        RingTables t = w.ring->tables();
        t.label = "duplication(" + a->label() + ")";
        return t;
    }());
    return w;
}

RingHom modulation_map(const Amalgam& w) {
    std::vector<Elem> map(w.ring->order());
    for (int x = 0; x < w.ring->order(); ++x) map[x] = w.decode[x].first;
    return make_hom(w.ring, w.a_ring, std::move(map));
}

RingHom inclusion_hom(const Amalgam& w) {
    const auto& jelems = w.j_ideal.elements();
    int zero_pos = -1;
    for (int k = 0; k < (int)jelems.size(); ++k)
        if (jelems[k] == w.b_ring->zero()) zero_pos = k;
    std::vector<Elem> map(w.a_ring->order());
    for (Elem x = 0; x < w.a_ring->order(); ++x) map[x] = w.encode(x, zero_pos);
    return make_hom(w.a_ring, w.ring, std::move(map));
}

Ideal zero_cross_j(const Amalgam& w, const Caps& caps) {
    std::vector<Elem> elems;
    for (int x = 0; x < w.ring->order(); ++x)
        if (w.decode[x].first == w.a_ring->zero()) elems.push_back(x);
    Ideal out(w.ring, std::move(elems));
    auto q = quotient_ring(w.ring, out);
    if (!ring_isomorphic(q.ring, w.a_ring, caps))
        throw std::logic_error("zero_cross_j: quotient is not isomorphic to A");
    return out;
}

Subring image_plus_j_subring(const Amalgam& w) {
    const RingPtr& b = w.b_ring;
    const int nb = b->order();
    std::vector<char> in(nb, 0);
    for (Elem x : w.hom.map) in[x] = 1;
    for (Elem x : w.j_ideal.elements()) in[x] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Elem> cur;
        for (Elem x = 0; x < nb; ++x)
            if (in[x]) cur.push_back(x);
        for (Elem x : cur)
            for (Elem y : cur) {
                if (!in[b->add(x, y)]) {
                    in[b->add(x, y)] = 1;
                    grew = true;
                }
                if (!in[b->mul(x, y)]) {
                    in[b->mul(x, y)] = 1;
                    grew = true;
                }
            }
    }
    std::vector<Elem> carrier;
    for (Elem x = 0; x < nb; ++x)
        if (in[x]) carrier.push_back(x);
    std::vector<int> pos(nb, -1);
    for (int k = 0; k < (int)carrier.size(); ++k) pos[carrier[k]] = k;

    const int m = (int)carrier.size();
    RingTables t;
    t.order = m;
    t.add.resize((size_t)m * m);
    t.mul.resize((size_t)m * m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            t.add[(size_t)x * m + y] = pos[b->add(carrier[x], carrier[y])];
            t.mul[(size_t)x * m + y] = pos[b->mul(carrier[x], carrier[y])];
        }
    t.zero = pos[b->zero()];
    t.one = pos[b->one()];
    t.label = "subring(f(A)+J of " + b->label() + ")";
    return Subring{FiniteRing::from_tables(std::move(t)), std::move(carrier)};
}

Ideal k_bowtie_j(const Amalgam& w, const Ideal& k) {
    require_same_ring(w.a_ring, k.ring(), "k_bowtie_j");
    std::vector<Elem> elems;
    for (int x = 0; x < w.ring->order(); ++x)
        if (k.contains(w.decode[x].first)) elems.push_back(x);
    return Ideal(w.ring, std::move(elems));  // validates the ideal axioms
}

namespace {

// Generator-image backtracking shared by iso search and hom enumeration.
// Propagates the partial map through the subring generated by the assigned
// generators; conflicts prune the branch.
struct HomSearch {
    const FiniteRing& r;
    const FiniteRing& s;
    const Caps& caps;
    bool bijective_only;
    std::vector<Elem> gens;  // ring generators of r beyond 0, 1
    long long nodes = 0;

    HomSearch(const FiniteRing& r_, const FiniteRing& s_, const Caps& caps_,
              bool bij)
        : r(r_), s(s_), caps(caps_), bijective_only(bij) {
        // Subring generated by 1 is the closure of {0, 1}; extend greedily.
        std::vector<char> in(r.order(), 0);
        close(in, r.zero(), r.one());
        while (true) {
            Elem g = -1;
            for (Elem x = 0; x < r.order(); ++x)
                if (!in[x]) {
                    g = x;
                    break;
                }
            if (g < 0) break;
            gens.push_back(g);
            close(in, g, g);
        }
    }

    void close(std::vector<char>& in, Elem seed1, Elem seed2) const {
        in[seed1] = 1;
        in[seed2] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Elem> cur;
            for (Elem x = 0; x < r.order(); ++x)
                if (in[x]) cur.push_back(x);
            for (Elem x : cur)
                for (Elem y : cur) {
                    if (!in[r.add(x, y)]) {
                        in[r.add(x, y)] = 1;
                        grew = true;
                    }
                    if (!in[r.mul(x, y)]) {
                        in[r.mul(x, y)] = 1;
                        grew = true;
                    }
                }
        }
    }

    // Extends `map` (and `used` when bijective) to the closure of the
    // currently assigned elements. Returns false on conflict.
    bool propagate(std::vector<Elem>& map, std::vector<char>& used) const {
        bool grew = true;
        while (grew) {
            grew = false;
            for (Elem x = 0; x < r.order(); ++x) {
                if (map[x] < 0) continue;
                for (Elem y = 0; y < r.order(); ++y) {
                    if (map[y] < 0) continue;
                    struct Pair {
                        Elem src, dst;
                    } derived[2] = {
                        {r.add(x, y), s.add(map[x], map[y])},
                        {r.mul(x, y), s.mul(map[x], map[y])},
                    };
                    for (const auto& d : derived) {
                        if (map[d.src] < 0) {
                            if (bijective_only && used[d.dst]) return false;
                            map[d.src] = d.dst;
                            if (bijective_only) used[d.dst] = 1;
                            grew = true;
                        } else if (map[d.src] != d.dst) {
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    }

    bool candidate_ok(Elem g, Elem img) const {
        if (r.additive_order(g) != s.additive_order(img) && bijective_only)
            return false;
        if (s.additive_order(img) != 0 &&
            r.additive_order(g) % s.additive_order(img) != 0)
            return false;
        if (r.is_idempotent(g) && !s.is_idempotent(img)) return false;
        if (r.is_unit(g) && !s.is_unit(img)) return false;
        if (bijective_only && (!r.is_unit(g) && s.is_unit(img))) return false;
        if (bijective_only && (!r.is_idempotent(g) && s.is_idempotent(img)))
            return false;
        return true;
    }

    template <typename SinkFn>
    bool search(size_t level, std::vector<Elem>& map, std::vector<char>& used,
                SinkFn&& sink) {
        if (++nodes > caps.iso_nodes)
            throw ResourceLimitError("ring hom search: node cap exceeded");
        if (level == gens.size()) {
            // All generators assigned; propagation has filled the closure,
            // which is everything.
            for (Elem x = 0; x < r.order(); ++x)
                if (map[x] < 0) throw std::logic_error("ring hom search: map incomplete");
            return sink(map);
        }
        const Elem g = gens[level];
        if (map[g] >= 0) return search(level + 1, map, used, sink);
        for (Elem img = 0; img < s.order(); ++img) {
            if (!candidate_ok(g, img)) continue;
            if (bijective_only && used[img]) continue;
            auto map2 = map;
            auto used2 = used;
            map2[g] = img;
            if (bijective_only) used2[img] = 1;
            if (!propagate(map2, used2)) continue;
            if (search(level + 1, map2, used2, sink)) return true;
        }
        return false;
    }

    template <typename SinkFn>
    void run(SinkFn&& sink) {
        std::vector<Elem> map(r.order(), -1);
        std::vector<char> used(s.order(), 0);
        map[r.zero()] = s.zero();
        map[r.one()] = s.one();
        if (bijective_only) {
            if (r.zero() == r.one()) {
                if (s.zero() != s.one()) return;
            } else if (s.zero() == s.one()) {
                return;
            }
            used[s.zero()] = 1;
            used[s.one()] = 1;
        }
        if (!propagate(map, used)) return;
        search(0, map, used, sink);
    }
};

std::vector<int> additive_order_multiset(const FiniteRing& r) {
    std::vector<int> out;
    for (Elem x = 0; x < r.order(); ++x) out.push_back(r.additive_order(x));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::optional<RingHom> ring_isomorphic(const RingPtr& r, const RingPtr& s,
                                       const Caps& caps) {
    if (r->order() != s->order()) return std::nullopt;
    if (additive_order_multiset(*r) != additive_order_multiset(*s))
        return std::nullopt;
    auto count = [](const RingPtr& q, auto pred) {
        int c = 0;
        for (Elem x = 0; x < q->order(); ++x)
            if (pred(x)) ++c;
        return c;
    };
    if (count(r, [&](Elem x) { return r->is_unit(x); }) !=
        count(s, [&](Elem x) { return s->is_unit(x); }))
        return std::nullopt;
    if (count(r, [&](Elem x) { return r->is_idempotent(x); }) !=
        count(s, [&](Elem x) { return s->is_idempotent(x); }))
        return std::nullopt;

    HomSearch hs(*r, *s, caps, /*bijective_only=*/true);
    std::optional<RingHom> out;
    hs.run([&](const std::vector<Elem>& map) {
        std::vector<char> seen(s->order(), 0);
        for (Elem y : map) {
            if (seen[y]) return false;
            seen[y] = 1;
        }
        out = make_hom(r, s, map);  // full validation of the found witness
        return true;
    });
    return out;
}

std::vector<RingHom> enumerate_ring_homs(const RingPtr& a, const RingPtr& b,
                                         const Caps& caps) {
    HomSearch hs(*a, *b, caps, /*bijective_only=*/false);
    std::vector<std::vector<Elem>> maps;
    hs.run([&](const std::vector<Elem>& map) {
        maps.push_back(map);
        return false;  // keep searching
    });
    std::sort(maps.begin(), maps.end());
    maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
    std::vector<RingHom> out;
    out.reserve(maps.size());
    for (auto& m : maps) out.push_back(make_hom(a, b, std::move(m)));
    return out;
}

}  // namespace amalgam
