#ifndef AMALGAM_RING_HPP
#define AMALGAM_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "amalgam/core.hpp"

namespace amalgam {

/// Raw Cayley tables, before validation.
struct RingTables {
    int order = 0;
    std::vector<Elem> add;  // order*order, row-major
    std::vector<Elem> mul;  // order*order, row-major
    Elem zero = 0;
    Elem one = 0;
    std::string label;
};

/// One violated axiom together with a witness tuple of element indices.
struct Defect {
    std::string axiom;
    std::vector<Elem> witness;
};

std::string format_defects(const std::vector<Defect>& defects);

/// Exhaustive axiom scan over the tables. Returns one entry per violated
/// axiom, each with the lexicographically least witness. The default entry
/// point parallelizes the cubic scans with OpenMP; the serial variant is the
/// reference implementation the tests compare against.
std::vector<Defect> validate_tables(const RingTables& t);
std::vector<Defect> validate_tables_serial(const RingTables& t);

struct ValidationError : InvalidParameter {
    explicit ValidationError(std::vector<Defect> d)
        : InvalidParameter(format_defects(d)), defects(std::move(d)) {}
    std::vector<Defect> defects;
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// A finite commutative ring with identity, given by validated Cayley tables
/// over dense element indices 0..order-1. Immutable after construction.
class FiniteRing {
public:
    /// Validates the tables and either returns the ring or throws
    /// ValidationError listing every violated axiom with a witness.
    static RingPtr from_tables(RingTables t);

    int order() const { return t_.order; }
    Elem zero() const { return t_.zero; }
    Elem one() const { return t_.one; }
    const std::string& label() const { return t_.label; }

    Elem add(Elem a, Elem b) const { return t_.add[a * t_.order + b]; }
    Elem mul(Elem a, Elem b) const { return t_.mul[a * t_.order + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }

    bool is_unit(Elem a) const { return unit_[a] != 0; }
    bool is_idempotent(Elem a) const { return mul(a, a) == a; }
    /// Least n >= 1 with n*a = 0.
    int additive_order(Elem a) const;

    const RingTables& tables() const { return t_; }

    bool same_tables(const FiniteRing& other) const {
        return t_.order == other.t_.order && t_.zero == other.t_.zero &&
               t_.one == other.t_.one && t_.add == other.t_.add &&
               t_.mul == other.t_.mul;
    }

private:
    explicit FiniteRing(RingTables t);
    RingTables t_;
    std::vector<Elem> neg_;
    std::vector<char> unit_;
};

/// Ring equality is table equality; separately constructed copies of the
/// same tables are interchangeable.
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Throws InvalidParameter unless a and b are equal rings. Element indices
/// never transfer between genuinely different rings.
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what);

/// Z/nZ with element i coded as index i.
RingPtr make_zmod(int n);

/// Re-runs the exhaustive axiom scan on an already constructed ring.
/// Empty report iff all invariants hold (always, for validated rings).
std::vector<Defect> validate_ring(const RingPtr& r);

/// make_from_tables is the public name for table-supplied fixtures.
RingPtr make_from_tables(std::vector<std::vector<Elem>> add,
                         std::vector<std::vector<Elem>> mul, Elem zero,
                         Elem one, const std::string& label);

/// All e with e*e = e, ascending.
std::vector<Elem> idempotents(const RingPtr& r);

/// A structure-preserving map between two finite rings, stored element-wise.
struct RingHom {
    RingPtr domain;
    RingPtr codomain;
    std::vector<Elem> map;

    Elem operator()(Elem a) const { return map[a]; }
};

/// Validates the hom laws exhaustively; throws ValidationError naming the
/// violated law with a witness pair.
RingHom make_hom(RingPtr domain, RingPtr codomain, std::vector<Elem> map);

RingHom identity_hom(const RingPtr& r);

bool is_injective_hom(const RingHom& f);
bool is_surjective_hom(const RingHom& f);

/// Composition g . f (apply f first).
RingHom compose(const RingHom& g, const RingHom& f);

struct ProductRing {
    RingPtr ring;
    RingHom proj_first;
    RingHom proj_second;
};

/// R x S with componentwise tables; element (r, s) is coded as r*|S| + s.
ProductRing make_product(const RingPtr& r, const RingPtr& s);

}  // namespace amalgam

#endif
