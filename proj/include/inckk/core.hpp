#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Core combinatorial types: d-sets of positive integers, uniform-cardinality
// families, the squashed (colex) and Borel orders, rank/unrank through the
// d-binomial representation, and shadows.
//
// Conventions: the ground set is {1, 2, 3, ...} (0 is invalid), ranks are
// 1-based, and families iterate in ascending squashed order.

namespace inckk {

using std::uint64_t;

/// Thrown when two values of different cardinality are compared or combined.
struct grade_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Checked binomial coefficient; throws std::overflow_error instead of wrapping.
uint64_t binom_checked(uint64_t n, uint64_t k);

/// min(C(n,k), cap + 1), computed without overflow.
uint64_t binom_capped(uint64_t n, uint64_t k, uint64_t cap);

/// A d-element subset of the positive integers, stored strictly increasing.
class DSet {
public:
    /// Validates: nonempty, strictly increasing, all elements >= 1.
    explicit DSet(std::vector<int> elements);

    /// Skips validation; caller guarantees the invariant.
    static DSet unchecked(std::vector<int> elements);

    int size() const { return static_cast<int>(elems_.size()); }
    const std::vector<int>& elements() const { return elems_; }
    int operator[](int i) const { return elems_[static_cast<size_t>(i)]; }
    int smallest() const { return elems_.front(); }
    int largest() const { return elems_.back(); }
    bool contains(int x) const;

    bool operator==(const DSet&) const = default;

    std::string to_string() const;

private:
    struct unchecked_tag {};
    DSet(unchecked_tag, std::vector<int> elements) : elems_(std::move(elements)) {}

    std::vector<int> elems_;
};

/// Squashed-order comparison: u < v iff the largest element of the symmetric
/// difference lies in v. Throws grade_mismatch if sizes differ.
std::strong_ordering squashed_cmp(const DSet& u, const DSet& v);

bool squashed_less(const DSet& u, const DSet& v);

/// Comparator object for containers of same-cardinality DSets.
struct SquashedLess {
    bool operator()(const DSet& u, const DSet& v) const { return squashed_less(u, v); }
};

/// Borel (coordinatewise) order: u <=_B v iff u_i <= v_i for all i.
bool borel_leq(const DSet& u, const DSet& v);

/// A finite set of d-sets of one fixed cardinality d, kept sorted in
/// ascending squashed order with no duplicates.
class Family {
public:
    explicit Family(int d);
    Family(int d, std::vector<DSet> members);

    int d() const { return d_; }
    uint64_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(const DSet& u) const;
    const std::vector<DSet>& members() const { return members_; }
    const DSet& smallest() const { return members_.front(); }
    const DSet& largest() const { return members_.back(); }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const Family&) const = default;

private:
    int d_;
    std::vector<DSet> members_;
};

/// Squashed order extended to families: F < G iff the squashed-largest
/// element of the symmetric difference belongs to G.
std::strong_ordering family_squashed_cmp(const Family& f, const Family& g);

/// Union of two families of equal cardinality grade.
Family family_union(const Family& f, const Family& g);

/// 1-based position of u among all |u|-sets in squashed order.
uint64_t rank(const DSet& u);

/// Inverse of rank: the m-th d-set (m >= 1) in squashed order.
DSet unrank(uint64_t m, int d);

/// One term C(a, i) of a d-binomial representation.
struct BinomialTerm {
    uint64_t a;
    int i;
    bool operator==(const BinomialTerm&) const = default;
};

/// The unique greedy expansion m = C(a_d,d) + ... + C(a_s,s) with
/// a_d > ... > a_s >= s >= 1; empty for m = 0. Terms are stored with
/// descending index i = d, d-1, ..., s.
class BinomialRep {
public:
    BinomialRep() = default;
    explicit BinomialRep(std::vector<BinomialTerm> terms) : terms_(std::move(terms)) {}

    const std::vector<BinomialTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    uint64_t value() const;

    bool operator==(const BinomialRep&) const = default;

private:
    std::vector<BinomialTerm> terms_;
};

BinomialRep binomial_rep(uint64_t m, int d);

/// Adds k >= 0 to every coordinate (k = 1 is the map u -> u + 1).
DSet shift_by(const DSet& u, int k);

/// All (d-1)-sets obtained by deleting one element from a member of f.
/// Requires f.d() >= 2.
Family shadow(const Family& f);

namespace detail {
/// Successor in squashed order (used by segment enumeration).
DSet squashed_next(const DSet& u);
/// Subtracts k from every coordinate; requires all elements > k.
DSet shift_down(const DSet& u, int k);
}  // namespace detail

}  // namespace inckk
