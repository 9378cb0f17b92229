#include "inckk/numeric.hpp"

#include <limits>

namespace inckk {

namespace {

constexpr uint64_t kU64Max = std::numeric_limits<uint64_t>::max();

uint64_t checked_sum(uint64_t a, uint64_t b) {
    if (a > kU64Max - b) throw std::overflow_error("cardinality sum overflows 64 bits");
    return a + b;
}

}  // namespace

uint64_t shadow_num(uint64_t m, int d) {
    if (d < 1) throw std::invalid_argument("shadow operator needs d >= 1");
    const BinomialRep rep = binomial_rep(m, d);
    uint64_t total = 0;
    for (const BinomialTerm& t : rep.terms())
        total = checked_sum(total, binom_checked(t.a, static_cast<uint64_t>(t.i) - 1));
    return total;
}

uint64_t inc_num(uint64_t m, int d) {
    if (d < 1) throw std::invalid_argument("Inc size operator needs d >= 1");
    const BinomialRep rep = binomial_rep(m, d);
    uint64_t total = 0;
    for (const BinomialTerm& t : rep.terms())
        total = checked_sum(total, binom_checked(t.a + 1, static_cast<uint64_t>(t.i)));
    return total;
}

FVector::FVector(std::vector<uint64_t> entries) : entries_(std::move(entries)) {
    while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

FVectorChain::FVectorChain(std::vector<FVector> vectors) : vectors_(std::move(vectors)) {
    if (vectors_.empty()) throw std::invalid_argument("chain must contain at least one vector");
}

std::optional<int> kk_violation(const FVector& f) {
    // Grade d holds f.at(d-1) many d-sets; its shadow must fit in grade d-1.
    for (size_t d = 2; d <= f.support(); ++d) {
        if (shadow_num(f.at(d - 1), static_cast<int>(d)) > f.at(d - 2))
            return static_cast<int>(d);
    }
    return std::nullopt;
}

std::optional<ChainViolation> chain_violation(const FVectorChain& chain) {
    const auto& vecs = chain.vectors();
    for (size_t idx = 0; idx < vecs.size(); ++idx) {
        if (auto d = kk_violation(vecs[idx]))
            return ChainViolation{idx + 1, *d, ChainInequality::shadow};
        if (idx + 1 < vecs.size()) {
            const FVector& cur = vecs[idx];
            const FVector& next = vecs[idx + 1];
            for (size_t d = 1; d <= cur.support(); ++d) {
                if (next.at(d - 1) < inc_num(cur.at(d - 1), static_cast<int>(d)))
                    return ChainViolation{idx + 1, static_cast<int>(d), ChainInequality::growth};
            }
        }
    }
    return std::nullopt;
}

}  // namespace inckk
