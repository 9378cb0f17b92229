#include "inckk/inc.hpp"

#include <limits>

namespace inckk {

DSet apply_pi(int i, const DSet& u) {
    if (i < 1) throw std::invalid_argument("pi index must be >= 1");
    std::vector<int> elems = u.elements();
    for (int& e : elems) {
        if (e >= i) {
            if (e == std::numeric_limits<int>::max())
                throw std::overflow_error("pi image exceeds int range");
            ++e;
        }
    }
    return DSet::unchecked(std::move(elems));
}

Family inc_image(const DSet& u) {
    int d = u.size();
    if (u.largest() == std::numeric_limits<int>::max())
        throw std::overflow_error("Inc image exceeds int range");
    std::vector<DSet> out;
    out.reserve(static_cast<size_t>(d) + 1);
    // Add 1 to the last t coordinates, t = 0..d; the monoid image is exactly
    // this list and its members are pairwise distinct.
    for (int t = 0; t <= d; ++t) {
        std::vector<int> elems = u.elements();
        for (int j = d - t; j < d; ++j) ++elems[static_cast<size_t>(j)];
        out.push_back(DSet::unchecked(std::move(elems)));
    }
    return Family(d, std::move(out));
}

Family inc_image(const Family& f) {
    std::vector<DSet> out;
    out.reserve(f.size() * (static_cast<uint64_t>(f.d()) + 1));
    for (const DSet& u : f) {
        Family img = inc_image(u);
        out.insert(out.end(), img.members().begin(), img.members().end());
    }
    return Family(f.d(), std::move(out));
}

Family inc_iterate(Family f, int t) {
    if (t < 0) throw std::invalid_argument("iteration count must be >= 0");
    for (int s = 0; s < t; ++s) f = inc_image(f);
    return f;
}

Family comb_shift(int i, const Family& f) {
    if (i <= 1) throw std::invalid_argument("combinatorial shift index must be > 1");
    std::vector<DSet> out;
    out.reserve(f.size());
    for (const DSet& u : f) {
        if (u.contains(i) && !u.contains(1)) {
            std::vector<int> elems;
            elems.reserve(u.elements().size());
            elems.push_back(1);
            for (int e : u.elements()) {
                if (e != i) elems.push_back(e);
            }
            DSet shifted(std::move(elems));
            if (!f.contains(shifted)) {
                out.push_back(std::move(shifted));
                continue;
            }
        }
        out.push_back(u);
    }
    return Family(f.d(), std::move(out));
}

}  // namespace inckk
