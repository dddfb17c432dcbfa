#include "oracles.hpp"

#include <algorithm>

namespace amalgam::oracles {

namespace {

// Checks every constraint whose participants are all assigned (index < limit
// or equal to the just-assigned index).
bool partial_ok(const FModule& m, const FModule& n,
                const std::vector<Elem>& map, int assigned) {
    for (int a = 0; a <= assigned; ++a)
        for (int b = 0; b <= assigned; ++b) {
            const Elem s = m.add(a, b);
            if (s <= assigned && map[s] != n.add(map[a], map[b])) return false;
        }
    const int r = m.ring()->order();
    for (int x = 0; x <= assigned; ++x)
        for (Elem a = 0; a < r; ++a) {
            const Elem y = m.act(a, x);
            if (y <= assigned && map[y] != n.act(a, map[x])) return false;
        }
    return true;
}

void search(const FModule& m, const FModule& n, std::vector<Elem>& map,
            int next, std::vector<std::vector<Elem>>& out) {
    if (next == m.order()) {
        out.push_back(map);
        return;
    }
    for (Elem y = 0; y < n.order(); ++y) {
        map[next] = y;
        if (partial_ok(m, n, map, next)) search(m, n, map, next + 1, out);
    }
}

}  // namespace

std::vector<std::vector<Elem>> brute_force_module_homs(const ModulePtr& m,
                                                       const ModulePtr& n) {
    std::vector<Elem> map(m->order(), 0);
    std::vector<std::vector<Elem>> out;
    search(*m, *n, map, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace amalgam::oracles
