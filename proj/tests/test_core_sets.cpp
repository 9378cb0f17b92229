#include <doctest.h>

#include <random>

#include "inckk/core.hpp"
#include "inckk/compression.hpp"
#include "inckk/numeric.hpp"
#include "oracle_helpers.hpp"

using namespace inckk;
using oracle::make_family;

namespace {

DSet ds(std::vector<int> v) { return DSet(std::move(v)); }

DSet random_dset(std::mt19937_64& rng, int max_elem, int d) {
    std::vector<int> pool(static_cast<size_t>(max_elem));
    std::iota(pool.begin(), pool.end(), 1);
    for (int i = 0; i < d; ++i) {
        std::uniform_int_distribution<size_t> pick(static_cast<size_t>(i), pool.size() - 1);
        std::swap(pool[static_cast<size_t>(i)], pool[pick(rng)]);
    }
    std::vector<int> elems(pool.begin(), pool.begin() + d);
    std::sort(elems.begin(), elems.end());
    return DSet(std::move(elems));
}

}  // namespace

TEST_CASE("DSet validation") {
    CHECK_THROWS_AS(DSet({}), std::invalid_argument);
    CHECK_THROWS_AS(DSet({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(DSet({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(DSet({2, 1}), std::invalid_argument);
    CHECK(ds({1, 2, 4}).largest() == 4);
    CHECK(ds({1, 2, 4}).contains(2));
    CHECK_FALSE(ds({1, 2, 4}).contains(3));
}

TEST_CASE("squashed comparison") {
    CHECK(squashed_cmp(ds({1, 3, 4}), ds({2, 3, 4})) == std::strong_ordering::less);
    CHECK(squashed_cmp(ds({1, 2, 3}), ds({1, 2, 3})) == std::strong_ordering::equal);
    CHECK(squashed_cmp(ds({2, 3, 4}), ds({1, 2, 5})) == std::strong_ordering::less);
    CHECK(squashed_cmp(ds({1, 2, 5}), ds({2, 3, 4})) == std::strong_ordering::greater);
    CHECK_THROWS_AS(squashed_cmp(ds({1, 2}), ds({1, 2, 3})), grade_mismatch);
}

TEST_CASE("squashed comparison agrees with the symmetric-difference definition") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        DSet u = random_dset(rng, 12, 4);
        DSet v = random_dset(rng, 12, 4);
        int expect = oracle::naive_squashed_cmp(u.elements(), v.elements());
        auto got = squashed_cmp(u, v);
        CHECK((expect < 0) == (got == std::strong_ordering::less));
        CHECK((expect == 0) == (got == std::strong_ordering::equal));
        CHECK((expect > 0) == (got == std::strong_ordering::greater));
    }
}

TEST_CASE("squashed order is total: antisymmetry, transitivity, identity of equals") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        DSet u = random_dset(rng, 10, 3);
        DSet v = random_dset(rng, 10, 3);
        DSet w = random_dset(rng, 10, 3);
        auto uv = squashed_cmp(u, v);
        auto vu = squashed_cmp(v, u);
        if (uv == std::strong_ordering::less) CHECK(vu == std::strong_ordering::greater);
        if (uv == std::strong_ordering::greater) CHECK(vu == std::strong_ordering::less);
        if (uv == std::strong_ordering::equal) {
            CHECK(vu == std::strong_ordering::equal);
            CHECK(u == v);
        }
        if (uv != std::strong_ordering::greater &&
            squashed_cmp(v, w) != std::strong_ordering::greater)
            CHECK(squashed_cmp(u, w) != std::strong_ordering::greater);
    }
}

TEST_CASE("Borel order") {
    CHECK(borel_leq(ds({1, 3, 4}), ds({2, 3, 4})));
    CHECK_FALSE(borel_leq(ds({2, 3, 4}), ds({1, 2, 5})));
    CHECK(borel_leq(ds({2, 3, 5}), ds({2, 3, 5})));
    CHECK_THROWS_AS(borel_leq(ds({1}), ds({1, 2})), grade_mismatch);
}

TEST_CASE("Borel dominance implies squashed dominance") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 2000; ++trial) {
        DSet u = random_dset(rng, 11, 4);
        DSet v = random_dset(rng, 11, 4);
        if (borel_leq(u, v)) CHECK(squashed_cmp(u, v) != std::strong_ordering::greater);
    }
}

TEST_CASE("family comparison") {
    Family f = make_family(3, {{1, 2, 6}, {1, 3, 5}, {2, 3, 5}, {3, 5, 6}});
    Family cl = make_family(3, {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}, {3, 4, 5}});
    CHECK(family_squashed_cmp(cl, f) == std::strong_ordering::less);
    CHECK(family_squashed_cmp(f, f) == std::strong_ordering::equal);
    CHECK(family_squashed_cmp(make_family(3, {{1, 2, 3}}), make_family(3, {{1, 2, 4}})) ==
          std::strong_ordering::less);
    CHECK_THROWS_AS(family_squashed_cmp(Family(2), Family(3)), grade_mismatch);

    SUBCASE("agrees with the symmetric-difference definition on random families") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<DSet> a, b;
            for (int i = 0; i < 4; ++i) {
                a.push_back(random_dset(rng, 8, 3));
                b.push_back(random_dset(rng, 8, 3));
            }
            Family fa(3, a), fb(3, b);
            // Largest symmetric-difference member decides.
            std::vector<DSet> diff;
            for (const DSet& u : fa)
                if (!fb.contains(u)) diff.push_back(u);
            for (const DSet& u : fb)
                if (!fa.contains(u)) diff.push_back(u);
            if (diff.empty()) {
                CHECK(family_squashed_cmp(fa, fb) == std::strong_ordering::equal);
            } else {
                DSet top = *std::max_element(diff.begin(), diff.end(), SquashedLess{});
                auto expect = fb.contains(top) ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
                CHECK(family_squashed_cmp(fa, fb) == expect);
            }
        }
    }
}

TEST_CASE("family normalization and membership") {
    Family f = make_family(3, {{2, 3, 5}, {1, 2, 4}, {1, 2, 4}});
    CHECK(f.size() == 2);
    CHECK(f.members().front() == ds({1, 2, 4}));
    CHECK(f.contains(ds({2, 3, 5})));
    CHECK_FALSE(f.contains(ds({1, 2, 3})));
    CHECK_THROWS_AS(Family(2, {ds({1, 2, 3})}), grade_mismatch);
}

TEST_CASE("rank examples") {
    CHECK(rank(ds({1, 2, 3})) == 1);
    CHECK(rank(ds({1, 2, 4})) == 2);
    CHECK(rank(ds({2, 3, 5})) == 7);
}

TEST_CASE("unrank examples") {
    CHECK(unrank(4, 3) == ds({2, 3, 4}));
    CHECK(unrank(1, 3) == ds({1, 2, 3}));
    CHECK(unrank(1, 5) == ds({1, 2, 3, 4, 5}));
    CHECK(unrank(7, 3) == ds({2, 3, 5}));
    CHECK_THROWS_AS(unrank(0, 3), std::invalid_argument);
}

TEST_CASE("the first seven 3-sets in squashed order") {
    // (1,2,3) < (1,2,4) < (1,3,4) < (2,3,4) < (1,2,5) < (1,3,5) < (2,3,5)
    std::vector<DSet> expected = {ds({1, 2, 3}), ds({1, 2, 4}), ds({1, 3, 4}), ds({2, 3, 4}),
                                  ds({1, 2, 5}), ds({1, 3, 5}), ds({2, 3, 5})};
    for (uint64_t m = 1; m <= expected.size(); ++m) CHECK(unrank(m, 3) == expected[m - 1]);
}

TEST_CASE("rank/unrank roundtrip and monotonicity") {
    for (int d = 1; d <= 6; ++d) {
        DSet prev = unrank(1, d);
        CHECK(rank(prev) == 1);
        for (uint64_t m = 2; m <= 3000; ++m) {
            DSet cur = unrank(m, d);
            CHECK(rank(cur) == m);
            CHECK(squashed_less(prev, cur));
            prev = cur;
        }
    }
}

TEST_CASE("rank agrees with counting against the naive comparison") {
    auto all = oracle::all_dsets_within(7, 3);
    for (const auto& u : all) {
        uint64_t count = 0;
        for (const auto& v : all)
            if (oracle::naive_squashed_cmp(v, u) < 0) ++count;
        // Sets inside [7] that are below u are all of binom([7],3)'s lower part,
        // and nothing outside [7] can be below a set inside it.
        CHECK(rank(DSet(u)) == count + 1);
    }
}

TEST_CASE("binomial representation examples") {
    auto rep = binomial_rep(7, 3);
    REQUIRE(rep.terms().size() == 2);
    CHECK(rep.terms()[0] == BinomialTerm{4, 3});
    CHECK(rep.terms()[1] == BinomialTerm{3, 2});
    CHECK(binomial_rep(0, 4).empty());
    auto rep2 = binomial_rep(2, 2);
    REQUIRE(rep2.terms().size() == 2);
    CHECK(rep2.terms()[0] == BinomialTerm{2, 2});
    CHECK(rep2.terms()[1] == BinomialTerm{1, 1});
}

TEST_CASE("binomial representation invariants and re-summation") {
    for (int d = 1; d <= 6; ++d) {
        for (uint64_t m = 0; m <= 5000; ++m) {
            auto rep = binomial_rep(m, d);
            CHECK(rep.value() == m);
            int expected_index = d;
            uint64_t prev_a = 0;
            bool first = true;
            for (const auto& term : rep.terms()) {
                CHECK(term.i == expected_index);
                CHECK(term.a >= static_cast<uint64_t>(term.i));
                if (!first) CHECK(term.a < prev_a);
                prev_a = term.a;
                first = false;
                --expected_index;
            }
        }
    }
}

TEST_CASE("shift examples") {
    CHECK(shift_by(ds({1, 2, 4}), 1) == ds({2, 3, 5}));
    CHECK(shift_by(ds({1, 2, 4}), 0) == ds({1, 2, 4}));
    CHECK(shift_by(ds({1, 3}), 2) == ds({3, 5}));
    CHECK_THROWS_AS(shift_by(ds({1}), -1), std::invalid_argument);
}

TEST_CASE("shadow examples") {
    Family f = make_family(3, {{1, 2, 3}, {1, 2, 4}});
    Family expected = make_family(2, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}});
    CHECK(shadow(f) == expected);
    CHECK(shadow(Family(3)) == Family(2));
    CHECK(shadow(make_family(3, {{1, 2, 3}})) == make_family(2, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK_THROWS_AS(shadow(Family(1)), std::invalid_argument);

    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<DSet> members;
        for (int i = 0; i < 5; ++i) members.push_back(random_dset(rng, 9, 4));
        Family g(4, members);
        CHECK(oracle::family_key(shadow(g)) == oracle::naive_shadow(g));
    }
}

TEST_CASE("compressed families have extremal shadows matching the numeric operator") {
    for (int d = 2; d <= 4; ++d) {
        for (uint64_t m = 0; m <= 200; ++m) {
            CHECK(shadow(compressed_family(m, d)).size() == shadow_num(m, d));
        }
    }
}

TEST_CASE("checked binomial coefficients") {
    CHECK(binom_checked(0, 0) == 1);
    CHECK(binom_checked(6, 3) == 20);
    CHECK(binom_checked(5, 9) == 0);
    CHECK(binom_checked(61, 30) == 232714176627630544ULL);
    CHECK_THROWS_AS(binom_checked(80, 40), std::overflow_error);
    CHECK(binom_capped(80, 40, 1000) == 1001);
}
