#include "inckk/core.hpp"

#include <algorithm>
#include <limits>

namespace inckk {

namespace {

constexpr uint64_t kU64Max = std::numeric_limits<uint64_t>::max();

}  // namespace

uint64_t binom_capped(uint64_t n, uint64_t k, uint64_t cap) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;  // exact at each step: product of i consecutive integers
        if (acc > cap) return cap == kU64Max ? kU64Max : cap + 1;
    }
    return static_cast<uint64_t>(acc);
}

uint64_t binom_checked(uint64_t n, uint64_t k) {
    uint64_t v = binom_capped(n, k, kU64Max - 1);
    if (v == kU64Max) throw std::overflow_error("binomial coefficient overflows 64 bits");
    return v;
}

DSet::DSet(std::vector<int> elements) : elems_(std::move(elements)) {
    if (elems_.empty()) throw std::invalid_argument("d-set must be nonempty");
    if (elems_.front() < 1) throw std::invalid_argument("d-set elements must be >= 1");
    for (size_t i = 1; i < elems_.size(); ++i) {
        if (elems_[i] <= elems_[i - 1])
            throw std::invalid_argument("d-set elements must be strictly increasing");
    }
}

DSet DSet::unchecked(std::vector<int> elements) {
    return DSet(unchecked_tag{}, std::move(elements));
}

bool DSet::contains(int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::string DSet::to_string() const {
    std::string s;
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(elems_[i]);
    }
    return s;
}

std::strong_ordering squashed_cmp(const DSet& u, const DSet& v) {
    if (u.size() != v.size())
        throw grade_mismatch("squashed order compares d-sets of equal cardinality");
    // Largest element of the symmetric difference = first disagreement from the top.
    for (int i = u.size() - 1; i >= 0; --i) {
        if (u[i] != v[i]) return u[i] <=> v[i];
    }
    return std::strong_ordering::equal;
}

bool squashed_less(const DSet& u, const DSet& v) {
    return squashed_cmp(u, v) == std::strong_ordering::less;
}

bool borel_leq(const DSet& u, const DSet& v) {
    if (u.size() != v.size())
        throw grade_mismatch("Borel order compares d-sets of equal cardinality");
    for (int i = 0; i < u.size(); ++i) {
        if (u[i] > v[i]) return false;
    }
    return true;
}

Family::Family(int d) : d_(d) {
    if (d < 1) throw std::invalid_argument("family cardinality d must be >= 1");
}

Family::Family(int d, std::vector<DSet> members) : d_(d), members_(std::move(members)) {
    if (d < 1) throw std::invalid_argument("family cardinality d must be >= 1");
    for (const DSet& u : members_) {
        if (u.size() != d) throw grade_mismatch("family member has wrong cardinality");
    }
    std::sort(members_.begin(), members_.end(), SquashedLess{});
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Family::contains(const DSet& u) const {
    if (u.size() != d_) return false;
    return std::binary_search(members_.begin(), members_.end(), u, SquashedLess{});
}

std::strong_ordering family_squashed_cmp(const Family& f, const Family& g) {
    if (f.d() != g.d())
        throw grade_mismatch("family order compares families of equal cardinality grade");
    // Walk both sorted member lists from the top; equal tops cancel, the first
    // disagreement is the largest element of the symmetric difference.
    auto fi = f.members().rbegin(), fe = f.members().rend();
    auto gi = g.members().rbegin(), ge = g.members().rend();
    while (fi != fe && gi != ge) {
        auto c = squashed_cmp(*fi, *gi);
        if (c != std::strong_ordering::equal) return c;
        ++fi;
        ++gi;
    }
    if (fi != fe) return std::strong_ordering::greater;
    if (gi != ge) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

Family family_union(const Family& f, const Family& g) {
    if (f.d() != g.d()) throw grade_mismatch("union of families of different cardinality");
    std::vector<DSet> all = f.members();
    all.insert(all.end(), g.members().begin(), g.members().end());
    return Family(f.d(), std::move(all));
}

uint64_t rank(const DSet& u) {
    uint64_t r = 1;
    for (int i = 0; i < u.size(); ++i) {
        uint64_t c = binom_checked(static_cast<uint64_t>(u[i]) - 1, static_cast<uint64_t>(i) + 1);
        if (r > kU64Max - c) throw std::overflow_error("rank overflows 64 bits");
        r += c;
    }
    return r;
}

namespace {

// Largest a >= i with C(a, i) <= rem (rem >= 1). Galloping + binary search.
uint64_t greedy_top(uint64_t rem, int i) {
    uint64_t k = static_cast<uint64_t>(i);
    if (k == 1) return rem;
    uint64_t lo = k, hi = k;
    while (binom_capped(hi + 1, k, rem) <= rem) {
        lo = hi + 1;
        hi = hi == 0 ? 1 : hi * 2;
    }
    while (lo < hi) {
        uint64_t mid = lo + (hi - lo + 1) / 2;
        if (binom_capped(mid, k, rem) <= rem)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace

BinomialRep binomial_rep(uint64_t m, int d) {
    if (d < 1) throw std::invalid_argument("binomial representation needs d >= 1");
    std::vector<BinomialTerm> terms;
    uint64_t rem = m;
    for (int i = d; i >= 1 && rem > 0; --i) {
        uint64_t a = greedy_top(rem, i);
        terms.push_back({a, i});
        rem -= binom_checked(a, static_cast<uint64_t>(i));
    }
    return BinomialRep(std::move(terms));
}

uint64_t BinomialRep::value() const {
    uint64_t total = 0;
    for (const BinomialTerm& t : terms_) {
        uint64_t c = binom_checked(t.a, static_cast<uint64_t>(t.i));
        if (total > kU64Max - c) throw std::overflow_error("binomial representation overflows");
        total += c;
    }
    return total;
}

DSet unrank(uint64_t m, int d) {
    if (m < 1) throw std::invalid_argument("rank must be >= 1");
    if (d < 1) throw std::invalid_argument("cardinality d must be >= 1");
    // With m = C(a_d,d) + ... + C(a_s,s), the m-th d-set is
    // (a_s-s+1, ..., a_s-1, a_s, a_{s+1}+1, ..., a_d+1).
    BinomialRep rep = binomial_rep(m, d);
    const auto& terms = rep.terms();
    int s = terms.back().i;
    std::vector<int> elems(static_cast<size_t>(d));
    uint64_t a_s = terms.back().a;
    for (int j = 1; j <= s; ++j) {
        uint64_t v = a_s - static_cast<uint64_t>(s - j);
        if (v > static_cast<uint64_t>(std::numeric_limits<int>::max()))
            throw std::overflow_error("unranked element exceeds int range");
        elems[static_cast<size_t>(j - 1)] = static_cast<int>(v);
    }
    for (int i = s + 1; i <= d; ++i) {
        uint64_t a = terms[static_cast<size_t>(d - i)].a;
        if (a + 1 > static_cast<uint64_t>(std::numeric_limits<int>::max()))
            throw std::overflow_error("unranked element exceeds int range");
        elems[static_cast<size_t>(i - 1)] = static_cast<int>(a + 1);
    }
    return DSet(std::move(elems));
}

DSet shift_by(const DSet& u, int k) {
    if (k < 0) throw std::invalid_argument("shift_by requires k >= 0");
    std::vector<int> elems = u.elements();
    for (int& e : elems) {
        if (e > std::numeric_limits<int>::max() - k)
            throw std::overflow_error("shifted element exceeds int range");
        e += k;
    }
    return DSet::unchecked(std::move(elems));
}

Family shadow(const Family& f) {
    if (f.d() < 2) throw std::invalid_argument("shadow requires cardinality d >= 2");
    std::vector<DSet> out;
    out.reserve(f.size() * static_cast<uint64_t>(f.d()));
    for (const DSet& u : f) {
        for (int i = 0; i < u.size(); ++i) {
            std::vector<int> v;
            v.reserve(static_cast<size_t>(u.size() - 1));
            for (int j = 0; j < u.size(); ++j) {
                if (j != i) v.push_back(u[j]);
            }
            out.push_back(DSet::unchecked(std::move(v)));
        }
    }
    return Family(f.d() - 1, std::move(out));
}

namespace detail {

DSet squashed_next(const DSet& u) {
    int d = u.size();
    // Raise the lowest coordinate that has headroom; reset everything below
    // it to 1, 2, ..., j-1.
    for (int j = 0; j < d; ++j) {
        int headroom = (j + 1 < d) ? u[j + 1] : std::numeric_limits<int>::max();
        if (u[j] + 1 < headroom) {
            std::vector<int> elems(static_cast<size_t>(d));
            for (int i = 0; i < j; ++i) elems[static_cast<size_t>(i)] = i + 1;
            elems[static_cast<size_t>(j)] = u[j] + 1;
            for (int i = j + 1; i < d; ++i) elems[static_cast<size_t>(i)] = u[i];
            return DSet::unchecked(std::move(elems));
        }
    }
    throw std::overflow_error("squashed successor exceeds int range");
}

DSet shift_down(const DSet& u, int k) {
    std::vector<int> elems = u.elements();
    for (int& e : elems) {
        if (e <= k) throw std::invalid_argument("shift_down requires all elements > k");
        e -= k;
    }
    return DSet::unchecked(std::move(elems));
}

}  // namespace detail

}  // namespace inckk
