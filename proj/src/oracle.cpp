#include "inckk/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <numeric>
#include <thread>

#include "inckk/compression.hpp"
#include "inckk/inc.hpp"
#include "inckk/numeric.hpp"

namespace inckk {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

uint64_t universe_size(int n, int d) {
    if (d < 1 || d > n) throw std::invalid_argument("universe requires 1 <= d <= n");
    uint64_t count = binom_checked(static_cast<uint64_t>(n), static_cast<uint64_t>(d));
    if (count > 63) throw std::invalid_argument("universe too large for mask enumeration");
    return count;
}

uint64_t next_mask(uint64_t c) {
    // Gosper: next bitmask with the same popcount, ascending numeric order.
    uint64_t t = c | (c - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(c) + 1));
}

// Precomputed Inc-images of the base d-sets of [n], as bitmasks over the
// d-sets of [n+1] (where every image lives).
struct MaskUniverse {
    int n = 0;
    int d = 0;
    uint32_t base_count = 0;
    size_t image_words = 0;
    std::vector<DSet> base;
    std::vector<uint64_t> inc_bits;   // base_count rows of image_words
    std::vector<uint64_t> baseline;   // |Inc(compressed_m)| for m = 0..base_count

    MaskUniverse(int n_in, int d_in) : n(n_in), d(d_in) {
        base_count = static_cast<uint32_t>(universe_size(n, d));
        base = compressed_family(base_count, d).members();
        uint64_t image_count =
            binom_checked(static_cast<uint64_t>(n) + 1, static_cast<uint64_t>(d));
        image_words = (image_count + 63) / 64;
        inc_bits.assign(base_count * image_words, 0);
        for (uint32_t i = 0; i < base_count; ++i) {
            for (const DSet& v : inc_image(base[i])) {
                uint64_t bit = rank(v) - 1;
                inc_bits[i * image_words + bit / 64] |= uint64_t{1} << (bit % 64);
            }
        }
        baseline.assign(base_count + 1, 0);
        std::vector<uint64_t> acc(image_words, 0);
        for (uint32_t i = 0; i < base_count; ++i) {
            for (size_t w = 0; w < image_words; ++w) acc[w] |= inc_bits[i * image_words + w];
            baseline[i + 1] = popcount_words(acc);
        }
    }

    static uint64_t popcount_words(const std::vector<uint64_t>& words) {
        uint64_t total = 0;
        for (uint64_t w : words) total += static_cast<uint64_t>(std::popcount(w));
        return total;
    }

    uint64_t inc_size(uint64_t mask, std::vector<uint64_t>& scratch) const {
        std::fill(scratch.begin(), scratch.end(), 0);
        for (uint64_t bits = mask; bits != 0; bits &= bits - 1) {
            uint32_t i = static_cast<uint32_t>(std::countr_zero(bits));
            const uint64_t* row = inc_bits.data() + i * image_words;
            for (size_t w = 0; w < image_words; ++w) scratch[w] |= row[w];
        }
        return popcount_words(scratch);
    }

    Family family_of(uint64_t mask) const {
        std::vector<DSet> members;
        members.reserve(static_cast<size_t>(std::popcount(mask)));
        for (uint64_t bits = mask; bits != 0; bits &= bits - 1)
            members.push_back(base[static_cast<size_t>(std::countr_zero(bits))]);
        return Family(d, std::move(members));
    }
};

// Per-partition sweep aggregate; merging in ascending partition order
// reproduces the single-threaded result exactly.
struct SweepAggregate {
    uint64_t checked = 0;
    uint64_t minimum = std::numeric_limits<uint64_t>::max();
    uint64_t minimizer_count = 0;
    std::vector<uint64_t> minimizer_masks;
    uint64_t violation_count = 0;
    std::vector<uint64_t> violation_masks;
};

// Sweeps all size-m masks within one leading-block partition: masks whose top
// set bit is base index `top`, lower bits enumerated in ascending order.
void sweep_partition(const MaskUniverse& mu, uint64_t m, uint32_t top, uint64_t want,
                     uint64_t cap, SweepAggregate& agg) {
    std::vector<uint64_t> scratch(mu.image_words);
    uint64_t high = uint64_t{1} << top;
    uint64_t low = (m == 1) ? 0 : (uint64_t{1} << (m - 1)) - 1;
    uint64_t low_end = uint64_t{1} << top;
    while (true) {
        uint64_t mask = high | low;
        uint64_t size = mu.inc_size(mask, scratch);
        ++agg.checked;
        if (size < agg.minimum) {
            agg.minimum = size;
            agg.minimizer_count = 1;
            agg.minimizer_masks.assign(1, mask);
        } else if (size == agg.minimum) {
            ++agg.minimizer_count;
            if (agg.minimizer_masks.size() < cap) agg.minimizer_masks.push_back(mask);
        }
        if (size < want) {
            ++agg.violation_count;
            if (agg.violation_masks.size() < cap) agg.violation_masks.push_back(mask);
        }
        if (m == 1) break;
        low = next_mask(low);
        if (low >= low_end) break;
    }
}

std::vector<SweepAggregate> run_partitions(const MaskUniverse& mu, uint64_t m, uint64_t want,
                                           uint64_t cap, int jobs) {
    uint32_t first_top = static_cast<uint32_t>(m - 1);
    uint32_t parts = mu.base_count - first_top;
    std::vector<SweepAggregate> aggs(parts);
    if (jobs <= 1 || parts <= 1) {
        for (uint32_t p = 0; p < parts; ++p)
            sweep_partition(mu, m, first_top + p, want, cap, aggs[p]);
        return aggs;
    }
    std::atomic<uint32_t> cursor{0};
    auto worker = [&]() {
        for (uint32_t p = cursor.fetch_add(1); p < parts; p = cursor.fetch_add(1))
            sweep_partition(mu, m, first_top + p, want, cap, aggs[p]);
    };
    std::vector<std::thread> pool;
    unsigned count = std::min<unsigned>(static_cast<unsigned>(jobs), parts);
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return aggs;
}

}  // namespace

FamilyEnumerator::FamilyEnumerator(int n, int d, uint64_t m) : d_(d) {
    uint64_t count = universe_size(n, d);
    if (m > count) throw std::invalid_argument("family size exceeds the universe");
    base_ = compressed_family(count, d).members();
    total_ = binom_checked(count, m);
    mask_ = (m == 0) ? 0 : (uint64_t{1} << m) - 1;
}

std::optional<Family> FamilyEnumerator::next() {
    if (emitted_ == total_) return std::nullopt;
    ++emitted_;
    std::vector<DSet> members;
    for (uint64_t bits = mask_; bits != 0; bits &= bits - 1)
        members.push_back(base_[static_cast<size_t>(std::countr_zero(bits))]);
    if (emitted_ < total_ && mask_ != 0) mask_ = next_mask(mask_);
    return Family(d_, std::move(members));
}

void for_each_family(int n, int d, uint64_t m, const std::function<void(const Family&)>& fn) {
    FamilyEnumerator stream(n, d, m);
    while (auto f = stream.next()) fn(*f);
}

VerificationReport verify_min_theorem(int n, int d, uint64_t m, int jobs, uint64_t report_cap) {
    auto start = Clock::now();
    MaskUniverse mu(n, d);
    if (m > mu.base_count) throw std::invalid_argument("family size exceeds the universe");
    VerificationReport report;
    report.n = n;
    report.d = d;
    report.m = m;
    report.report_cap = report_cap;
    if (m == 0) {
        report.checked = 1;
        report.minimum = 0;
        report.minimizer_count = 1;
        report.minimizers.push_back(Family(d));
        report.elapsed_seconds = seconds_since(start);
        return report;
    }
    uint64_t want = mu.baseline[m];
    auto aggs = run_partitions(mu, m, want, report_cap, jobs);
    uint64_t minimum = std::numeric_limits<uint64_t>::max();
    uint64_t min_count = 0;
    std::vector<uint64_t> min_masks;
    for (const SweepAggregate& agg : aggs) {
        report.checked += agg.checked;
        report.violation_count += agg.violation_count;
        for (uint64_t mask : agg.violation_masks) {
            if (report.violations.size() < report_cap)
                report.violations.push_back(mu.family_of(mask));
        }
        if (agg.checked == 0) continue;
        if (agg.minimum < minimum) {
            minimum = agg.minimum;
            min_count = agg.minimizer_count;
            min_masks.assign(agg.minimizer_masks.begin(), agg.minimizer_masks.end());
        } else if (agg.minimum == minimum) {
            min_count += agg.minimizer_count;
            for (uint64_t mask : agg.minimizer_masks) {
                if (min_masks.size() < report_cap) min_masks.push_back(mask);
            }
        }
    }
    if (min_masks.size() > report_cap) min_masks.resize(report_cap);
    report.minimum = minimum;
    report.minimizer_count = min_count;
    for (uint64_t mask : min_masks) report.minimizers.push_back(mu.family_of(mask));
    report.elapsed_seconds = seconds_since(start);
    return report;
}

std::vector<VerificationReport> verify_min_theorem_all_m(int n, int d, int jobs,
                                                         uint64_t report_cap) {
    uint64_t count = universe_size(n, d);
    std::vector<VerificationReport> reports;
    reports.reserve(count + 1);
    for (uint64_t m = 0; m <= count; ++m)
        reports.push_back(verify_min_theorem(n, d, m, jobs, report_cap));
    return reports;
}

std::vector<Family> equality_cases(int n, int d, uint64_t m, int jobs) {
    MaskUniverse mu(n, d);
    if (m > mu.base_count) throw std::invalid_argument("family size exceeds the universe");
    if (m == 0) return {Family(d)};
    uint64_t bound = inc_num(m, d);
    uint32_t first_top = static_cast<uint32_t>(m - 1);
    uint32_t parts = mu.base_count - first_top;
    std::vector<std::vector<uint64_t>> hits(parts);
    auto scan = [&](uint32_t p) {
        std::vector<uint64_t> scratch(mu.image_words);
        uint32_t top = first_top + p;
        uint64_t high = uint64_t{1} << top;
        uint64_t low = (m == 1) ? 0 : (uint64_t{1} << (m - 1)) - 1;
        while (true) {
            uint64_t mask = high | low;
            if (mu.inc_size(mask, scratch) == bound) hits[p].push_back(mask);
            if (m == 1) break;
            low = next_mask(low);
            if (low >= high) break;
        }
    };
    if (jobs <= 1 || parts <= 1) {
        for (uint32_t p = 0; p < parts; ++p) scan(p);
    } else {
        std::atomic<uint32_t> cursor{0};
        auto worker = [&]() {
            for (uint32_t p = cursor.fetch_add(1); p < parts; p = cursor.fetch_add(1)) scan(p);
        };
        std::vector<std::thread> pool;
        unsigned count = std::min<unsigned>(static_cast<unsigned>(jobs), parts);
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::vector<Family> out;
    for (const auto& block : hits)
        for (uint64_t mask : block) out.push_back(mu.family_of(mask));
    return out;
}

namespace {

Family prepend_all(int k, const Family& hats, int d) {
    std::vector<DSet> out;
    out.reserve(hats.size());
    for (const DSet& w : hats) {
        std::vector<int> elems;
        elems.reserve(w.elements().size() + 1);
        elems.push_back(k);
        elems.insert(elems.end(), w.elements().begin(), w.elements().end());
        out.push_back(DSet(std::move(elems)));
    }
    return Family(d, std::move(out));
}

Family append_all(const Family& hats, int k, int d) {
    std::vector<DSet> out;
    out.reserve(hats.size());
    for (const DSet& w : hats) {
        std::vector<int> elems = w.elements();
        elems.push_back(k);
        out.push_back(DSet(std::move(elems)));
    }
    return Family(d, std::move(out));
}

Family shift_all(const Family& f, int k) {
    std::vector<DSet> out;
    out.reserve(f.size());
    for (const DSet& u : f) out.push_back(shift_by(u, k));
    return Family(f.d(), std::move(out));
}

bool subfamily(const Family& inner, const Family& outer) {
    for (const DSet& u : inner)
        if (!outer.contains(u)) return false;
    return true;
}

}  // namespace

bool verify_identities(const Family& f) {
    if (f.d() < 2) throw std::invalid_argument("identity checks require d >= 2");
    const int d = f.d();
    const int top = f.empty() ? 0 : f.largest().largest();
    const Family inc_f = inc_image(f);

    Family eq6(d), eq7(d), eq1(d), eq2(d), eq3(d), eq4(d);
    for (int k = 1; k <= top + 1; ++k) {
        Family first_k = slice_first(f, k);
        Family first_km1 = k >= 2 ? slice_first(f, k - 1) : Family(d - 1);
        Family last_k = slice_last(f, k);
        Family last_km1 = k >= 2 ? slice_last(f, k - 1) : Family(d - 1);

        Family left_pieces = family_union(inc_image(first_k), shift_all(first_km1, 1));
        eq6 = family_union(eq6, prepend_all(k, left_pieces, d));
        eq1 = family_union(eq1, prepend_all(k, compress_above(left_pieces, k), d));
        eq3 = family_union(
            eq3, prepend_all(k,
                             family_union(inc_image(compress_above(first_k, k)),
                                          shift_all(compress_above(first_km1, k - 1), 1)),
                             d));

        Family right_pieces = family_union(last_k, inc_image(last_km1));
        eq7 = family_union(eq7, append_all(right_pieces, k, d));
        eq2 = family_union(eq2, append_all(compress(right_pieces), k, d));
        eq4 = family_union(
            eq4,
            append_all(family_union(compress(last_k), inc_image(compress(last_km1))), k, d));
    }

    if (eq6 != inc_f) return false;
    if (eq7 != inc_f) return false;
    if (eq1 != left_compress(inc_f)) return false;
    if (eq2 != right_compress(inc_f)) return false;
    if (eq3 != inc_image(left_compress(f))) return false;
    if (eq4 != inc_image(right_compress(f))) return false;

    // Compression transfer into a shifted ambient, on every slice instance
    // and on the family itself for each admissible threshold.
    for (int k = 1; k <= top; ++k) {
        Family hat = slice_first(f, k);
        if (hat.empty()) continue;
        if (!subfamily(inc_image(compress_above(hat, k)), compress_above(inc_image(hat), k)))
            return false;
    }
    int min_elem = 1;
    if (!f.empty()) {
        min_elem = f.smallest().smallest();
        for (const DSet& u : f) min_elem = std::min(min_elem, u.smallest());
    }
    for (int k = 0; k < min_elem; ++k) {
        if (!subfamily(inc_image(compress_above(f, k)), compress_above(inc_f, k))) return false;
    }
    return true;
}

std::optional<ShiftWitness> search_shift_noninclusion(int n, int d, uint64_t max_m) {
    uint64_t count = universe_size(n, d);
    uint64_t cap = std::min<uint64_t>(max_m, count);
    for (uint64_t m = 1; m <= cap; ++m) {
        FamilyEnumerator stream(n, d, m);
        while (auto f = stream.next()) {
            Family inc_f = inc_image(*f);
            for (int i = 2; i <= n + 1; ++i) {
                Family a = inc_image(comb_shift(i, *f));
                Family b = comb_shift(i, inc_f);
                if (!subfamily(a, b) && !subfamily(b, a))
                    return ShiftWitness{*f, i};
            }
        }
    }
    return std::nullopt;
}

SegmentReport verify_segment_lemmas(int max_elem, int max_d) {
    if (max_elem < 1 || max_d < 1) throw std::invalid_argument("bounds must be >= 1");
    auto start = Clock::now();
    SegmentReport report;
    report.max_elem = max_elem;
    report.max_d = max_d;
    for (int d = 1; d <= std::min(max_d, max_elem); ++d) {
        uint64_t count =
            binom_checked(static_cast<uint64_t>(max_elem), static_cast<uint64_t>(d));
        for (const DSet& u : compressed_family(count, d)) {
            DSet up = shift_by(u, 1);
            bool ok = inc_image(initial_segment(u)) == initial_segment(up) &&
                      inc_image(borel_ideal(u)) == borel_ideal(up);
            ++report.checked;
            if (!ok) report.violations.push_back(u);
        }
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

Family random_family(std::mt19937_64& rng, int max_elem, int d, uint64_t m) {
    uint64_t count = binom_checked(static_cast<uint64_t>(max_elem), static_cast<uint64_t>(d));
    if (m > count) throw std::invalid_argument("family size exceeds the universe");
    std::vector<DSet> base = compressed_family(count, d).members();
    std::vector<uint32_t> indices(base.size());
    std::iota(indices.begin(), indices.end(), 0);
    std::vector<DSet> members;
    members.reserve(m);
    for (uint64_t j = 0; j < m; ++j) {
        std::uniform_int_distribution<size_t> pick(j, indices.size() - 1);
        std::swap(indices[j], indices[pick(rng)]);
        members.push_back(base[indices[j]]);
    }
    return Family(d, std::move(members));
}

}  // namespace inckk
