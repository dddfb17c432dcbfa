#include "amalgam/ring.hpp"

#include <algorithm>
#include <sstream>

namespace amalgam {

std::string format_defects(const std::vector<Defect>& defects) {
    std::ostringstream os;
    os << "ring validation failed:";
    for (const auto& d : defects) {
        os << " [" << d.axiom << " @";
        for (Elem w : d.witness) os << ' ' << w;
        os << "]";
    }
    return os.str();
}

namespace {

bool in_range(Elem x, int n) { return x >= 0 && x < n; }

// The cubic scans below (associativity, distributivity) dominate validation
// cost; they are written as flat loops over the first index so the parallel
// wrapper can split on i. A violation is reported with the lexicographically
// least witness so reports do not depend on scan order.
struct AxiomScan {
    const RingTables& t;
    int n;

    const Elem* add;
    const Elem* mul;

    explicit AxiomScan(const RingTables& tables)
        : t(tables), n(tables.order), add(tables.add.data()),
          mul(tables.mul.data()) {}

    Elem a(Elem x, Elem y) const { return add[x * n + y]; }
    Elem m(Elem x, Elem y) const { return mul[x * n + y]; }

    // Each checker returns the least violating witness for first index i,
    // or empty. Tables must already be closed (entries in range).
    std::vector<Elem> add_assoc_row(int i) const {
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (a(a(i, j), k) != a(i, a(j, k)))
                    return {i, j, k};
        return {};
    }
    std::vector<Elem> mul_assoc_row(int i) const {
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (m(m(i, j), k) != m(i, m(j, k)))
                    return {i, j, k};
        return {};
    }
    std::vector<Elem> distrib_row(int i) const {
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (m(i, a(j, k)) != a(m(i, j), m(i, k)))
                    return {i, j, k};
        return {};
    }
};

// Shared by the serial and parallel entry points: everything except the
// cubic scans, which the caller supplies.
template <typename CubicScanFn>
std::vector<Defect> validate_impl(const RingTables& t, CubicScanFn&& cubic) {
    std::vector<Defect> out;
    const int n = t.order;

    if (n <= 0) {
        out.push_back({"order-positive", {}});
        return out;
    }
    if ((int)t.add.size() != n * n || (int)t.mul.size() != n * n) {
        out.push_back({"tables-square", {}});
        return out;
    }
    if (!in_range(t.zero, n)) out.push_back({"zero-in-range", {t.zero}});
    if (!in_range(t.one, n)) out.push_back({"one-in-range", {t.one}});
    if (!out.empty()) return out;

    for (int i = 0; i < n * n; ++i) {
        if (!in_range(t.add[i], n)) {
            out.push_back({"add-closed", {i / n, i % n}});
            break;
        }
    }
    for (int i = 0; i < n * n; ++i) {
        if (!in_range(t.mul[i], n)) {
            out.push_back({"mul-closed", {i / n, i % n}});
            break;
        }
    }
    if (!out.empty()) return out;  // closure is a precondition for the rest

    AxiomScan s(t);

    for (int i = 0; i < n; ++i) {
        bool done = false;
        for (int j = 0; j < n; ++j)
            if (s.a(i, j) != s.a(j, i)) {
                out.push_back({"add-commutative", {i, j}});
                done = true;
                break;
            }
        if (done) break;
    }
    for (int i = 0; i < n; ++i) {
        bool done = false;
        for (int j = 0; j < n; ++j)
            if (s.m(i, j) != s.m(j, i)) {
                out.push_back({"mul-commutative", {i, j}});
                done = true;
                break;
            }
        if (done) break;
    }
    for (int i = 0; i < n; ++i)
        if (s.a(t.zero, i) != i) {
            out.push_back({"add-identity", {i}});
            break;
        }
    for (int i = 0; i < n; ++i)
        if (s.m(t.one, i) != i) {
            out.push_back({"mul-identity", {i}});
            break;
        }
    for (int i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (int j = 0; j < n; ++j)
            if (s.a(i, j) == t.zero) {
                has_inverse = true;
                break;
            }
        if (!has_inverse) {
            out.push_back({"add-inverse", {i}});
            break;
        }
    }
    if (n > 1 && t.zero == t.one) out.push_back({"zero-ne-one", {t.zero}});

    cubic(s, out);

    return out;
}

void cubic_serial(const AxiomScan& s, std::vector<Defect>& out) {
    for (int i = 0; i < s.n; ++i) {
        auto w = s.add_assoc_row(i);
        if (!w.empty()) {
            out.push_back({"add-associative", w});
            break;
        }
    }
    for (int i = 0; i < s.n; ++i) {
        auto w = s.mul_assoc_row(i);
        if (!w.empty()) {
            out.push_back({"mul-associative", w});
            break;
        }
    }
    for (int i = 0; i < s.n; ++i) {
        auto w = s.distrib_row(i);
        if (!w.empty()) {
            out.push_back({"distributive", w});
            break;
        }
    }
}

void cubic_parallel(const AxiomScan& s, std::vector<Defect>& out) {
    // Three independent row-parallel scans; each keeps the least violating
    // first index so the reported witness matches the serial scan.
    struct Hit {
        int row = -1;
    };
    Hit assoc_add, assoc_mul, distrib;

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < s.n; ++i) {
        if (!s.add_assoc_row(i).empty()) {
#pragma omp critical(amalgam_validate_add)
            if (assoc_add.row < 0 || i < assoc_add.row) assoc_add.row = i;
        }
        if (!s.mul_assoc_row(i).empty()) {
#pragma omp critical(amalgam_validate_mul)
            if (assoc_mul.row < 0 || i < assoc_mul.row) assoc_mul.row = i;
        }
        if (!s.distrib_row(i).empty()) {
#pragma omp critical(amalgam_validate_dist)
            if (distrib.row < 0 || i < distrib.row) distrib.row = i;
        }
    }

    if (assoc_add.row >= 0)
        out.push_back({"add-associative", s.add_assoc_row(assoc_add.row)});
    if (assoc_mul.row >= 0)
        out.push_back({"mul-associative", s.mul_assoc_row(assoc_mul.row)});
    if (distrib.row >= 0)
        out.push_back({"distributive", s.distrib_row(distrib.row)});
}

}  // namespace

std::vector<Defect> validate_tables_serial(const RingTables& t) {
    return validate_impl(t, cubic_serial);
}

std::vector<Defect> validate_tables(const RingTables& t) {
    return validate_impl(t, cubic_parallel);
}

FiniteRing::FiniteRing(RingTables t) : t_(std::move(t)) {
    const int n = t_.order;
    neg_.assign(n, 0);
    unit_.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (add(i, j) == t_.zero) neg_[i] = j;
            if (mul(i, j) == t_.one) unit_[i] = 1;
        }
}

RingPtr FiniteRing::from_tables(RingTables t) {
    auto defects = validate_tables(t);
    if (!defects.empty()) throw ValidationError(std::move(defects));
    return RingPtr(new FiniteRing(std::move(t)));
}

int FiniteRing::additive_order(Elem a) const {
    Elem x = a;
    int k = 1;
    while (x != t_.zero) {
        x = add(x, a);
        ++k;
    }
    return k;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a.get() == b.get() || a->same_tables(*b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
    if (!same_ring(a, b))
        throw InvalidParameter(std::string(what) + ": values belong to different rings");
}

RingPtr make_zmod(int n) {
    if (n < 1) throw InvalidParameter("make_zmod: n must be >= 1");
    RingTables t;
    t.order = n;
    t.add.resize(n * n);
    t.mul.resize(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            t.add[i * n + j] = (i + j) % n;
            t.mul[i * n + j] = (i * j) % n;
        }
    t.zero = 0;
    t.one = 1 % n;
    t.label = "zmod(" + std::to_string(n) + ")";
    return FiniteRing::from_tables(std::move(t));
}

std::vector<Defect> validate_ring(const RingPtr& r) {
    return validate_tables(r->tables());
}

RingPtr make_from_tables(std::vector<std::vector<Elem>> add,
                         std::vector<std::vector<Elem>> mul, Elem zero,
                         Elem one, const std::string& label) {
    const int n = (int)add.size();
    if ((int)mul.size() != n)
        throw InvalidParameter("make_from_tables: tables must have equal size");
    RingTables t;
    t.order = n;
    t.add.reserve(n * n);
    t.mul.reserve(n * n);
    for (int i = 0; i < n; ++i) {
        if ((int)add[i].size() != n || (int)mul[i].size() != n)
            throw InvalidParameter("make_from_tables: tables must be square");
        t.add.insert(t.add.end(), add[i].begin(), add[i].end());
        t.mul.insert(t.mul.end(), mul[i].begin(), mul[i].end());
    }
    t.zero = zero;
    t.one = one;
    t.label = label;
    return FiniteRing::from_tables(std::move(t));
}

std::vector<Elem> idempotents(const RingPtr& r) {
    std::vector<Elem> out;
    for (Elem e = 0; e < r->order(); ++e)
        if (r->is_idempotent(e)) out.push_back(e);
    return out;
}

RingHom make_hom(RingPtr domain, RingPtr codomain, std::vector<Elem> map) {
    const int n = domain->order();
    if ((int)map.size() != n)
        throw InvalidParameter("make_hom: map length must equal |domain|");
    std::vector<Defect> defects;
    for (Elem x : map)
        if (x < 0 || x >= codomain->order()) {
            defects.push_back({"hom-range", {x}});
            throw ValidationError(std::move(defects));
        }
    if (map[domain->one()] != codomain->one())
        defects.push_back({"hom-one", {domain->one()}});
    for (int x = 0; x < n && defects.empty(); ++x)
        for (int y = 0; y < n; ++y) {
            if (map[domain->add(x, y)] != codomain->add(map[x], map[y])) {
                defects.push_back({"hom-add", {x, y}});
                break;
            }
            if (map[domain->mul(x, y)] != codomain->mul(map[x], map[y])) {
                defects.push_back({"hom-mul", {x, y}});
                break;
            }
        }
    if (!defects.empty()) throw ValidationError(std::move(defects));
    return RingHom{std::move(domain), std::move(codomain), std::move(map)};
}

RingHom identity_hom(const RingPtr& r) {
    std::vector<Elem> map(r->order());
    for (int i = 0; i < r->order(); ++i) map[i] = i;
    return RingHom{r, r, std::move(map)};
}

bool is_injective_hom(const RingHom& f) {
    std::vector<char> seen(f.codomain->order(), 0);
    for (Elem y : f.map) {
        if (seen[y]) return false;
        seen[y] = 1;
    }
    return true;
}

bool is_surjective_hom(const RingHom& f) {
    std::vector<char> seen(f.codomain->order(), 0);
    for (Elem y : f.map) seen[y] = 1;
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

RingHom compose(const RingHom& g, const RingHom& f) {
    if (!same_ring(f.codomain, g.domain))
        throw InvalidParameter("compose: codomain/domain mismatch");
    std::vector<Elem> map(f.map.size());
    for (size_t i = 0; i < f.map.size(); ++i) map[i] = g.map[f.map[i]];
    return RingHom{f.domain, g.codomain, std::move(map)};
}

ProductRing make_product(const RingPtr& r, const RingPtr& s) {
    const int nr = r->order(), ns = s->order(), n = nr * ns;
    RingTables t;
    t.order = n;
    t.add.resize((size_t)n * n);
    t.mul.resize((size_t)n * n);
    auto code = [ns](Elem a, Elem b) { return a * ns + b; };
    for (int a1 = 0; a1 < nr; ++a1)
        for (int b1 = 0; b1 < ns; ++b1)
            for (int a2 = 0; a2 < nr; ++a2)
                for (int b2 = 0; b2 < ns; ++b2) {
                    const int x = code(a1, b1), y = code(a2, b2);
                    t.add[(size_t)x * n + y] = code(r->add(a1, a2), s->add(b1, b2));
                    t.mul[(size_t)x * n + y] = code(r->mul(a1, a2), s->mul(b1, b2));
                }
    t.zero = code(r->zero(), s->zero());
    t.one = code(r->one(), s->one());
    t.label = "product(" + r->label() + ", " + s->label() + ")";
    RingPtr p = FiniteRing::from_tables(std::move(t));

    std::vector<Elem> m1(n), m2(n);
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < ns; ++b) {
            m1[code(a, b)] = a;
            m2[code(a, b)] = b;
        }
    return ProductRing{p, make_hom(p, r, std::move(m1)),
                       make_hom(p, s, std::move(m2))};
}

}  // namespace amalgam
