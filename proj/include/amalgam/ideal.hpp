#ifndef AMALGAM_IDEAL_HPP
#define AMALGAM_IDEAL_HPP

#include <optional>
#include <vector>

#include "amalgam/ring.hpp"

namespace amalgam {

/// An ideal of a finite ring, stored in canonical form: the ascending sorted
/// list of its element indices. Set equality is ideal equality.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Elem> sorted_elements);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Elem>& elements() const { return elems_; }
    int size() const { return (int)elems_.size(); }
    bool contains(Elem x) const { return mask_[x] != 0; }
    bool is_zero() const { return elems_.size() == 1; }
    bool is_whole_ring() const { return (int)elems_.size() == ring_->order(); }

    friend bool operator==(const Ideal& a, const Ideal& b) {
        return a.elems_ == b.elems_ && same_ring(a.ring_, b.ring_);
    }

private:
    RingPtr ring_;
    std::vector<Elem> elems_;
    std::vector<char> mask_;
};

/// Smallest ideal containing gens: closure under addition and multiplication
/// by every ring element. Empty gens give the zero ideal.
Ideal ideal_generated(const RingPtr& r, const std::vector<Elem>& gens);

/// Checks the ideal axioms for an explicit subset.
bool is_ideal(const RingPtr& r, const std::vector<Elem>& sorted_elements);

/// { x : x*s = 0 for all s in S }. S may be any subset, not just an ideal.
Ideal annihilator(const RingPtr& r, const std::vector<Elem>& s);
Ideal annihilator(const Ideal& i);

Ideal ideal_sum(const Ideal& i, const Ideal& k);
Ideal ideal_intersection(const Ideal& i, const Ideal& k);
Ideal ideal_product(const Ideal& i, const Ideal& k);

/// The full ideal lattice: principal ideals closed under pairwise sums until
/// a fixed point, deduplicated and sorted by (cardinality, element list).
/// Throws ResourceLimitError past caps.ideal_lattice.
std::vector<Ideal> all_ideals(const RingPtr& r, const Caps& caps = {});

/// Least idempotent e with eR = J, if any.
std::optional<Elem> idempotent_generator(const RingPtr& r, const Ideal& j);

/// z is regular iff z*x = 0 implies x = 0. In a finite commutative ring this
/// coincides with z being a unit; the implementation asserts that.
bool is_regular_element(const RingPtr& r, Elem z);

/// Maximal elements of the proper-ideal poset. Requires order >= 2.
std::vector<Ideal> maximal_ideals(const RingPtr& r, const Caps& caps = {});

/// True iff R has exactly one maximal ideal. Cross-checked against the
/// "no nontrivial idempotents" criterion, which must agree for finite
/// commutative rings. Requires order >= 2.
bool is_local(const RingPtr& r, const Caps& caps = {});

struct QuotientRing {
    RingPtr ring;
    RingHom projection;  // surjective, kernel exactly the ideal
};

/// R/I with cosets represented by their least element index.
QuotientRing quotient_ring(const RingPtr& r, const Ideal& i);

/// f^{-1}(J) as an ideal of the domain.
Ideal preimage_ideal(const RingHom& f, const Ideal& j);

}  // namespace amalgam

#endif
