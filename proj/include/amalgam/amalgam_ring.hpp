#ifndef AMALGAM_AMALGAM_RING_HPP
#define AMALGAM_AMALGAM_RING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "amalgam/ideal.hpp"
#include "amalgam/ring.hpp"

namespace amalgam {

/// The subring {(a, f(a)+j) : a in A, j in J} of A x B, materialized as a
/// FiniteRing whose element i*|J| + k encodes the pair (a_i, f(a_i) + j_k).
struct Amalgam {
    RingPtr ring;
    RingPtr a_ring;
    RingPtr b_ring;
    RingHom hom;    // f: A -> B
    Ideal j_ideal;  // J, an ideal of B
    /// decode[w] = (a, b) with b = f(a) + j; injective by construction.
    std::vector<std::pair<Elem, Elem>> decode;

    /// Index of (a, f(a)+j) given a and the position of j in J.
    Elem encode(Elem a, int j_pos) const { return a * j_ideal.size() + j_pos; }
};

Amalgam amalgamate(const RingPtr& a, const RingPtr& b, const RingHom& f,
                   const Ideal& j, const Caps& caps = {});

/// The amalgamated duplication: amalgamate(A, A, identity, I).
Amalgam duplication(const RingPtr& a, const Ideal& i, const Caps& caps = {});

/// g: A join^f J -> A, (a, f(a)+j) |-> a. Surjective; kernel {0} x J.
RingHom modulation_map(const Amalgam& w);

/// The natural embedding A -> A join^f J, a |-> (a, f(a)).
RingHom inclusion_hom(const Amalgam& w);

/// The ideal {(0, j) : j in J}. Its quotient is asserted ring-isomorphic
/// to A by an isomorphism search.
Ideal zero_cross_j(const Amalgam& w, const Caps& caps = {});

/// The subring f(A)+J of B (closure of f(A) union J), with the list of
/// B-elements it contains (carrier[i] is the B-element coded i).
struct Subring {
    RingPtr ring;
    std::vector<Elem> carrier;
};

Subring image_plus_j_subring(const Amalgam& w);

/// The ideal {(k, f(k)+j) : k in K, j in J} of the amalgam.
Ideal k_bowtie_j(const Amalgam& w, const Ideal& k);

/// A bijective RingHom R -> S if one exists; generator-image backtracking
/// with invariant pruning, deterministic candidate order.
std::optional<RingHom> ring_isomorphic(const RingPtr& r, const RingPtr& s,
                                       const Caps& caps = {});

/// All unital ring homs A -> B, in deterministic order.
std::vector<RingHom> enumerate_ring_homs(const RingPtr& a, const RingPtr& b,
                                         const Caps& caps = {});

}  // namespace amalgam

#endif
