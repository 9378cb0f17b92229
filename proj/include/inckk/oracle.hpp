#pragma once

#include <functional>
#include <optional>
#include <random>

#include "inckk/core.hpp"

// Exhaustive desk-scale verification: enumeration of all size-m families
// inside a truncated ground set, sweeps checking the compression minimality
// theorem, equality-case collection, the composition identities, the
// shifting non-inclusion search, and the segment/ideal image lemmas.

namespace inckk {

/// Outcome of a minimality sweep over all size-m subsets of the d-sets in [n].
struct VerificationReport {
    int n = 0;
    int d = 0;
    uint64_t m = 0;
    uint64_t checked = 0;
    uint64_t violation_count = 0;
    std::vector<Family> violations;  ///< first few, up to report_cap
    uint64_t minimum = 0;            ///< min |Inc(F)| over the sweep
    uint64_t minimizer_count = 0;
    std::vector<Family> minimizers;  ///< first few in enumeration order, up to report_cap
    uint64_t report_cap = 0;
    double elapsed_seconds = 0.0;
};

/// Streams every size-m subset of the d-sets inside [n], each exactly once,
/// in ascending order of the enumeration encoding (families earlier in the
/// squashed order of their top member come first).
class FamilyEnumerator {
public:
    FamilyEnumerator(int n, int d, uint64_t m);

    std::optional<Family> next();

    /// C(C(n,d), m): how many families the stream yields in total.
    uint64_t total() const { return total_; }

private:
    int d_;
    std::vector<DSet> base_;
    uint64_t total_;
    uint64_t mask_ = 0;
    uint64_t emitted_ = 0;
};

void for_each_family(int n, int d, uint64_t m, const std::function<void(const Family&)>& fn);

/// Checks |Inc(F)| >= |Inc(compression of F)| for every size-m family in the
/// universe, recording the minimum and its witnesses. jobs > 1 splits the
/// sweep by leading-block prefix; reports are identical for any job count.
VerificationReport verify_min_theorem(int n, int d, uint64_t m, int jobs = 1,
                                      uint64_t report_cap = 64);

/// One report per m = 0..C(n,d).
std::vector<VerificationReport> verify_min_theorem_all_m(int n, int d, int jobs = 1,
                                                         uint64_t report_cap = 64);

/// All size-m families in the universe whose Inc-image attains the numeric
/// lower bound, in enumeration order.
std::vector<Family> equality_cases(int n, int d, uint64_t m, int jobs = 1);

/// Evaluates the slice decompositions of Inc composed with the partial
/// compressions (both orders) against direct computation, plus the
/// compression-transfer inclusion in a shifted ambient. Requires d >= 2.
bool verify_identities(const Family& f);

struct ShiftWitness {
    Family family;
    int i;
};

/// First (F, i) in enumeration order, |F| <= max_m, F inside [n], such that
/// Inc(S_i(F)) and S_i(Inc(F)) are inclusion-incomparable.
std::optional<ShiftWitness> search_shift_noninclusion(int n, int d, uint64_t max_m);

struct SegmentReport {
    int max_elem = 0;
    int max_d = 0;
    uint64_t checked = 0;
    std::vector<DSet> violations;  ///< sets u where either image identity failed
    double elapsed_seconds = 0.0;
};

/// Confirms Inc(segment(u)) = segment(u+1) and Inc(ideal(u)) = ideal(u+1)
/// for every u with largest element <= max_elem and |u| <= max_d.
SegmentReport verify_segment_lemmas(int max_elem, int max_d);

/// Uniformly random size-m subset of the d-sets inside [max_elem].
Family random_family(std::mt19937_64& rng, int max_elem, int d, uint64_t m);

}  // namespace inckk
