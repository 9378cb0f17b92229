#include "inckk/compression.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace inckk {

namespace {

// First m d-sets in squashed order, by successor iteration from (1,...,d).
std::vector<DSet> first_segment(uint64_t m, int d) {
    if (m > kEnumerationGuard)
        throw std::length_error("initial segment too large to materialize");
    std::vector<DSet> out;
    out.reserve(m);
    if (m == 0) return out;
    std::vector<int> base(static_cast<size_t>(d));
    std::iota(base.begin(), base.end(), 1);
    DSet cur = DSet::unchecked(std::move(base));
    for (uint64_t i = 0; i + 1 < m; ++i) {
        out.push_back(cur);
        cur = detail::squashed_next(cur);
    }
    out.push_back(std::move(cur));
    return out;
}

void borel_walk(const DSet& u, int coord, int low, std::vector<int>& prefix,
                std::vector<DSet>& out) {
    if (coord == u.size()) {
        if (out.size() >= kEnumerationGuard)
            throw std::length_error("Borel ideal too large to materialize");
        out.push_back(DSet::unchecked(prefix));
        return;
    }
    for (int v = low; v <= u[coord]; ++v) {
        prefix.push_back(v);
        borel_walk(u, coord + 1, v + 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Family initial_segment(const DSet& u) {
    return Family(u.size(), first_segment(rank(u), u.size()));
}

Family borel_ideal(const DSet& u) {
    std::vector<DSet> out;
    std::vector<int> prefix;
    borel_walk(u, 0, 1, prefix, out);
    return Family(u.size(), std::move(out));
}

Family compress(const Family& f) {
    return Family(f.d(), first_segment(f.size(), f.d()));
}

Family compressed_family(uint64_t m, int d) {
    return Family(d, first_segment(m, d));
}

Family compress_above(const Family& f, int k) {
    if (k < 0) throw std::invalid_argument("compression threshold must be >= 0");
    if (k == 0) return compress(f);
    // Conjugate by the shift bijection between d-sets over N and over N_{>k}.
    std::vector<DSet> lowered;
    lowered.reserve(f.size());
    for (const DSet& u : f) lowered.push_back(detail::shift_down(u, k));
    Family compressed = compress(Family(f.d(), std::move(lowered)));
    std::vector<DSet> raised;
    raised.reserve(compressed.size());
    for (const DSet& u : compressed) raised.push_back(shift_by(u, k));
    return Family(f.d(), std::move(raised));
}

bool is_compressed(const Family& f) {
    if (f.empty()) return true;
    return rank(f.largest()) == f.size();
}

bool is_shifted(const Family& f) {
    // Downward closure under unit decrements generates the Borel order.
    for (const DSet& u : f) {
        for (int i = 0; i < u.size(); ++i) {
            int floor = (i == 0) ? 1 : u[i - 1] + 1;
            if (u[i] - 1 < floor) continue;
            std::vector<int> elems = u.elements();
            --elems[static_cast<size_t>(i)];
            if (!f.contains(DSet::unchecked(std::move(elems)))) return false;
        }
    }
    return true;
}

namespace {

Family strip_coordinate(const Family& f, int k, bool first) {
    if (f.d() < 2) throw std::invalid_argument("slicing requires cardinality d >= 2");
    std::vector<DSet> out;
    for (const DSet& u : f) {
        int pinned = first ? u.smallest() : u.largest();
        if (pinned != k) continue;
        std::vector<int> elems(first ? u.elements().begin() + 1 : u.elements().begin(),
                               first ? u.elements().end() : u.elements().end() - 1);
        out.push_back(DSet::unchecked(std::move(elems)));
    }
    return Family(f.d() - 1, std::move(out));
}

std::vector<int> pinned_values(const Family& f, bool first) {
    std::vector<int> keys;
    for (const DSet& u : f) {
        int k = first ? u.smallest() : u.largest();
        if (keys.empty() || keys.back() != k) keys.push_back(k);
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

}  // namespace

Family slice_first(const Family& f, int k) { return strip_coordinate(f, k, true); }

Family slice_last(const Family& f, int k) { return strip_coordinate(f, k, false); }

Family left_compress(const Family& f) {
    if (f.d() < 2) throw std::invalid_argument("left partial compression requires d >= 2");
    std::vector<DSet> out;
    out.reserve(f.size());
    for (int k : pinned_values(f, true)) {
        Family hat = compress_above(slice_first(f, k), k);
        for (const DSet& w : hat) {
            std::vector<int> elems;
            elems.reserve(w.elements().size() + 1);
            elems.push_back(k);
            elems.insert(elems.end(), w.elements().begin(), w.elements().end());
            out.push_back(DSet::unchecked(std::move(elems)));
        }
    }
    return Family(f.d(), std::move(out));
}

Family right_compress(const Family& f) {
    if (f.d() < 2) throw std::invalid_argument("right partial compression requires d >= 2");
    std::vector<DSet> out;
    out.reserve(f.size());
    for (int k : pinned_values(f, false)) {
        Family hat = compress(slice_last(f, k));
        for (const DSet& w : hat) {
            // Compression only lowers sets, so the hat stays below k.
            std::vector<int> elems = w.elements();
            elems.push_back(k);
            out.push_back(DSet(std::move(elems)));
        }
    }
    return Family(f.d(), std::move(out));
}

bool is_left_compressed(const Family& f) {
    if (f.d() < 2) return true;
    return left_compress(f) == f;
}

bool is_right_compressed(const Family& f) {
    if (f.d() < 2) return true;
    return right_compress(f) == f;
}

Family fixpoint(const Family& f, uint64_t iteration_cap) {
    if (f.d() == 1) return compress(f);
    if (iteration_cap == 0)
        iteration_cap = 10 * f.size() * static_cast<uint64_t>(f.d()) + 16;
    Family cur = left_compress(f);
    // Comparing F^(1) against F^(0) is skipped on purpose: a family fixed by
    // the left compression may still move under the right one. From step 2 on,
    // an unchanged iterate is the output of one operator and a fixed point of
    // the other, hence fixed by both.
    for (uint64_t step = 2; step <= iteration_cap; ++step) {
        Family next = (step % 2 == 0) ? right_compress(cur) : left_compress(cur);
        if (next == cur) return next;
        cur = std::move(next);
    }
    throw std::runtime_error("partial compression sequence failed to stabilize within cap");
}

}  // namespace inckk
