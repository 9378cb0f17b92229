#pragma once

// Test-only brute-force oracles, independent of the library code paths they
// check: naive symmetric-difference comparison, image enumeration through the
// generator maps, and box enumeration for segments and ideals.

#include <algorithm>
#include <set>
#include <vector>

#include "inckk/core.hpp"
#include "inckk/inc.hpp"

namespace oracle {

using inckk::DSet;
using inckk::Family;

// Squashed comparison straight from the definition: locate the largest
// element of the symmetric difference and ask which side it is on.
inline int naive_squashed_cmp(const std::vector<int>& u, const std::vector<int>& v) {
    std::set<int> su(u.begin(), u.end()), sv(v.begin(), v.end());
    std::set<int> diff;
    for (int x : su)
        if (!sv.count(x)) diff.insert(x);
    for (int x : sv)
        if (!su.count(x)) diff.insert(x);
    if (diff.empty()) return 0;
    int top = *diff.rbegin();
    return sv.count(top) ? -1 : 1;
}

// Rank by counting smaller sets, using only the naive comparison.
inline std::vector<std::vector<int>> all_dsets_within(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int low) -> void {
        if (static_cast<int>(cur.size()) == d) {
            out.push_back(cur);
            return;
        }
        for (int v = low; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// Inc-image of one set by enumerating every generator map directly.
inline std::set<std::vector<int>> pi_route_image(const DSet& u) {
    std::set<std::vector<int>> out;
    for (int i = 1; i <= u.largest() + 1; ++i) {
        std::vector<int> img;
        for (int e : u.elements()) img.push_back(e >= i ? e + 1 : e);
        out.insert(std::move(img));
    }
    return out;
}

inline std::set<std::vector<int>> family_key(const Family& f) {
    std::set<std::vector<int>> out;
    for (const DSet& u : f) out.insert(u.elements());
    return out;
}

// Shadow by raw deletion into a set.
inline std::set<std::vector<int>> naive_shadow(const Family& f) {
    std::set<std::vector<int>> out;
    for (const DSet& u : f) {
        for (size_t i = 0; i < u.elements().size(); ++i) {
            std::vector<int> v = u.elements();
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
            out.insert(std::move(v));
        }
    }
    return out;
}

inline Family make_family(int d, std::initializer_list<std::vector<int>> members) {
    std::vector<DSet> sets;
    for (const auto& m : members) sets.push_back(DSet(m));
    return Family(d, std::move(sets));
}

}  // namespace oracle
