#include <doctest.h>

#include <bit>
#include <random>

#include "inckk/compression.hpp"
#include "inckk/inc.hpp"
#include "inckk/oracle.hpp"
#include "oracle_helpers.hpp"

using namespace inckk;
using oracle::make_family;

namespace {

DSet ds(std::vector<int> v) { return DSet(std::move(v)); }

// The running four-member example family.
Family example_family() {
    return make_family(3, {{1, 2, 6}, {1, 3, 5}, {2, 3, 5}, {3, 5, 6}});
}

std::vector<Family> all_families_within(int n, int d) {
    uint64_t count = binom_checked(static_cast<uint64_t>(n), static_cast<uint64_t>(d));
    std::vector<DSet> base = compressed_family(count, d).members();
    std::vector<Family> out;
    out.reserve(size_t{1} << count);
    for (uint64_t mask = 0; mask < (uint64_t{1} << count); ++mask) {
        std::vector<DSet> members;
        for (uint64_t bits = mask; bits != 0; bits &= bits - 1)
            members.push_back(base[static_cast<size_t>(std::countr_zero(bits))]);
        out.push_back(Family(d, std::move(members)));
    }
    return out;
}

}  // namespace

TEST_CASE("initial segments") {
    CHECK(initial_segment(ds({2, 3, 4})) ==
          make_family(3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
    CHECK(initial_segment(ds({1, 2, 3, 4})) == make_family(4, {{1, 2, 3, 4}}));
    CHECK(initial_segment(ds({1, 2, 5})) ==
          make_family(3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}}));
    CHECK(initial_segment(ds({1, 2, 5})).size() == rank(ds({1, 2, 5})));
}

TEST_CASE("Borel ideals") {
    CHECK(borel_ideal(ds({2, 3})) == make_family(2, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(borel_ideal(ds({1, 2, 3})) == make_family(3, {{1, 2, 3}}));
    CHECK(borel_ideal(ds({1, 4})) == make_family(2, {{1, 2}, {1, 3}, {1, 4}}));

    SUBCASE("ideal membership agrees with the coordinatewise order") {
        DSet u = ds({2, 4, 5});
        Family ideal = borel_ideal(u);
        for (const auto& raw : oracle::all_dsets_within(5, 3)) {
            DSet v(raw);
            CHECK(ideal.contains(v) == borel_leq(v, u));
        }
    }
}

TEST_CASE("compression") {
    CHECK(compress(make_family(3, {{1, 3, 5}, {2, 3, 4}, {1, 2, 6}})) ==
          make_family(3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}));
    Family seg = initial_segment(ds({1, 3, 5}));
    CHECK(compress(seg) == seg);
    CHECK(compress(Family(3)) == Family(3));
}

TEST_CASE("compression above a threshold") {
    CHECK(compress_above(make_family(2, {{2, 5}, {3, 4}}), 1) ==
          make_family(2, {{2, 3}, {2, 4}}));
    Family f = make_family(2, {{2, 5}, {3, 4}});
    CHECK(compress_above(f, 0) == compress(f));
    CHECK(compress_above(Family(2), 7) == Family(2));
    CHECK_THROWS_AS(compress_above(make_family(2, {{1, 2}}), 1), std::invalid_argument);
}

TEST_CASE("compressed and shifted predicates") {
    Family shifted_not_compressed = make_family(2, {{1, 2}, {1, 3}, {1, 4}});
    CHECK(is_shifted(shifted_not_compressed));
    CHECK_FALSE(is_compressed(shifted_not_compressed));
    CHECK(is_compressed(initial_segment(ds({2, 4, 5}))));
    CHECK_FALSE(is_shifted(make_family(2, {{1, 3}})));
    CHECK(is_shifted(Family(4)));
    CHECK(is_compressed(Family(4)));

    SUBCASE("shifted predicate agrees with the two-point definition") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 200; ++trial) {
            Family f = random_family(rng, 6, 3, 1 + trial % 6);
            bool expect = true;
            for (const auto& raw : oracle::all_dsets_within(6, 3)) {
                DSet v(raw);
                if (f.contains(v)) continue;
                for (const DSet& u : f) {
                    if (borel_leq(v, u)) expect = false;
                }
            }
            CHECK(is_shifted(f) == expect);
        }
    }

    SUBCASE("compressed families are shifted") {
        for (uint64_t m = 0; m <= 40; ++m) CHECK(is_shifted(compressed_family(m, 3)));
    }
}

TEST_CASE("slices strip the pinned coordinate") {
    Family f = example_family();
    CHECK(slice_first(f, 1) == make_family(2, {{2, 6}, {3, 5}}));
    CHECK(slice_last(f, 5) == make_family(2, {{1, 3}, {2, 3}}));
    CHECK(slice_first(f, 4) == Family(2));
    CHECK_THROWS_AS(slice_first(Family(1), 1), std::invalid_argument);
}

TEST_CASE("left partial compression") {
    CHECK(left_compress(example_family()) ==
          make_family(3, {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}, {3, 4, 5}}));
    Family fixed = make_family(3, {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}});
    CHECK(left_compress(fixed) == fixed);
    CHECK(left_compress(Family(3)) == Family(3));
    CHECK_THROWS_AS(left_compress(Family(1)), std::invalid_argument);
}

TEST_CASE("right partial compression") {
    CHECK(right_compress(example_family()) ==
          make_family(3, {{1, 2, 5}, {1, 3, 5}, {1, 2, 6}, {1, 3, 6}}));
    Family fixed = make_family(3, {{1, 2, 4}, {1, 3, 4}});
    CHECK(right_compress(fixed) == fixed);
    CHECK(right_compress(Family(3)) == Family(3));
    CHECK_THROWS_AS(right_compress(Family(1)), std::invalid_argument);
}

TEST_CASE("alternating fixpoint") {
    CHECK(fixpoint(example_family()) ==
          make_family(3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {1, 2, 5}}));
    Family seg = initial_segment(ds({1, 3, 4}));
    CHECK(fixpoint(seg) == seg);
    CHECK(fixpoint(Family(3)) == Family(3));

    SUBCASE("cardinality grade 1 compresses directly") {
        CHECK(fixpoint(make_family(1, {{4}, {7}, {2}})) == make_family(1, {{1}, {2}, {3}}));
    }

    SUBCASE("left- and right-compressed but not yet stable at the first step") {
        // Already left-compressed families must still move under the right map.
        Family f = make_family(2, {{1, 2}, {2, 3}});
        CHECK(is_left_compressed(f));
        CHECK_FALSE(is_right_compressed(f));
        Family fp = fixpoint(f);
        CHECK(fp == make_family(2, {{1, 2}, {1, 3}}));
        CHECK(is_left_compressed(fp));
        CHECK(is_right_compressed(fp));
        CHECK(fp.size() == f.size());
    }
}

TEST_CASE("partial compression predicates") {
    Family fp = fixpoint(example_family());
    CHECK(is_left_compressed(fp));
    CHECK(is_right_compressed(fp));
    CHECK_FALSE(is_left_compressed(example_family()));
    CHECK_FALSE(is_right_compressed(example_family()));
    CHECK(is_left_compressed(Family(3)));
    CHECK(is_right_compressed(Family(3)));
}

TEST_CASE("partial compression invariants, exhaustive over the 3-sets of [5]") {
    for (const Family& f : all_families_within(5, 3)) {
        Family left = left_compress(f);
        Family right = right_compress(f);
        CHECK(left.size() == f.size());
        CHECK(right.size() == f.size());
        CHECK(family_squashed_cmp(left, f) != std::strong_ordering::greater);
        CHECK(family_squashed_cmp(right, f) != std::strong_ordering::greater);
        for (int k = 1; k <= 5; ++k) {
            CHECK(slice_first(left, k) == compress_above(slice_first(f, k), k));
            CHECK(slice_last(right, k) == compress(slice_last(f, k)));
        }
        Family fp = fixpoint(f);
        CHECK(fp.size() == f.size());
        CHECK(is_left_compressed(fp));
        CHECK(is_right_compressed(fp));
        CHECK(is_shifted(fp));
    }
}

TEST_CASE("partial compression invariants on random larger families") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        Family f = random_family(rng, 7, 3, 2 + trial % 10);
        Family left = left_compress(f);
        Family right = right_compress(f);
        CHECK(left.size() == f.size());
        CHECK(right.size() == f.size());
        CHECK(family_squashed_cmp(left, f) != std::strong_ordering::greater);
        CHECK(family_squashed_cmp(right, f) != std::strong_ordering::greater);
        Family fp = fixpoint(f);
        CHECK(is_shifted(fp));
        CHECK(is_left_compressed(fp));
        CHECK(is_right_compressed(fp));
    }
}

TEST_CASE("image/compression exchange on segments and ideals") {
    for (const auto& raw :
         {std::vector<int>{1, 2, 4}, {2, 3}, {1, 4}, {3, 4, 5}, {1, 2, 3, 5}}) {
        DSet u(raw);
        DSet up = shift_by(u, 1);
        CHECK(inc_image(initial_segment(u)) == initial_segment(up));
        CHECK(inc_image(borel_ideal(u)) == borel_ideal(up));
    }
    CHECK(inc_image(initial_segment(ds({1, 2, 4}))).size() == 7);
}

TEST_CASE("image minimality of compression on a small exhaustive universe") {
    for (const Family& f : all_families_within(5, 3)) {
        CHECK(inc_image(compress(f)).size() <= inc_image(f).size());
    }
    for (const Family& f : all_families_within(5, 2)) {
        CHECK(inc_image(compress(f)).size() <= inc_image(f).size());
    }
}
