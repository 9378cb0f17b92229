#pragma once

#include <optional>

#include "inckk/core.hpp"

// Pure-arithmetic operators on cardinalities: the shadow and Inc-image size
// bounds derived from the d-binomial representation, the face-count
// feasibility test for single complexes, and its extension to chains.

namespace inckk {

/// Size of the shadow of the compressed d-family of size m.
uint64_t shadow_num(uint64_t m, int d);

/// Size of the Inc-image of the compressed d-family of size m.
uint64_t inc_num(uint64_t m, int d);

/// Finitely supported face-count vector: entry j counts (j+1)-sets
/// (j-dimensional faces). Trailing zeros are normalized away.
class FVector {
public:
    FVector() = default;
    explicit FVector(std::vector<uint64_t> entries);

    /// Entry j, 0 beyond the stored support.
    uint64_t at(size_t j) const { return j < entries_.size() ? entries_[j] : 0; }
    const std::vector<uint64_t>& entries() const { return entries_; }
    size_t support() const { return entries_.size(); }

    bool operator==(const FVector&) const = default;

private:
    std::vector<uint64_t> entries_;
};

/// A sequence of face-count vectors indexed by chain position n = 1..N.
class FVectorChain {
public:
    explicit FVectorChain(std::vector<FVector> vectors);

    const std::vector<FVector>& vectors() const { return vectors_; }
    size_t length() const { return vectors_.size(); }

    bool operator==(const FVectorChain&) const = default;

private:
    std::vector<FVector> vectors_;
};

/// Smallest cardinality d >= 2 where the shadow inequality
/// shadow_num(#d-sets, d) <= #(d-1)-sets fails; nullopt when feasible.
std::optional<int> kk_violation(const FVector& f);

inline bool kk_feasible(const FVector& f) { return !kk_violation(f).has_value(); }

enum class ChainInequality { shadow, growth };

struct ChainViolation {
    size_t n;  // 1-based chain position
    int d;     // cardinality of the failing inequality
    ChainInequality which;
    bool operator==(const ChainViolation&) const = default;
};

/// First violation scanning n ascending; at each n the shadow conditions are
/// checked before the growth conditions toward n+1. nullopt when feasible.
std::optional<ChainViolation> chain_violation(const FVectorChain& chain);

inline bool chain_feasible(const FVectorChain& chain) {
    return !chain_violation(chain).has_value();
}

}  // namespace inckk
