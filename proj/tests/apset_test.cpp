#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "rmspec/apset.hpp"

using namespace rmspec;

namespace {

std::vector<std::uint64_t> expand(const APSet& s) { return s.members(); }

APSet from_set(const std::set<std::uint64_t>& s) {
    return APSet::from_values({s.begin(), s.end()});
}

std::set<std::uint64_t> random_set(std::mt19937_64& rng, std::uint64_t limit, std::size_t n) {
    std::set<std::uint64_t> s;
    std::uniform_int_distribution<std::uint64_t> dist(0, limit);
    // Mix raw draws with short progressions so segment merging paths get hit.
    while (s.size() < n) {
        if (rng() % 3 == 0) {
            std::uint64_t start = dist(rng) / 2;
            std::uint64_t step = 1 + rng() % 8;
            std::uint64_t len = 2 + rng() % 6;
            for (std::uint64_t i = 0; i < len && start + i * step <= limit; ++i)
                s.insert(start + i * step);
        } else {
            s.insert(dist(rng));
        }
    }
    return s;
}

}  // namespace

TEST_CASE("segment compression picks maximal greedy runs") {
    const APSet a = APSet::from_values({0, 8, 16, 24});
    REQUIRE(a.segments().size() == 1);
    CHECK(a.segments()[0] == Segment{0, 8, 4});

    // {0,16} | {24..40 step 4} | {48,64}: run breaks where the step changes.
    const APSet b = APSet::from_values({0, 16, 24, 28, 32, 36, 40, 48, 64});
    REQUIRE(b.segments().size() == 3);
    CHECK(b.segments()[0] == Segment{0, 16, 2});
    CHECK(b.segments()[1] == Segment{24, 4, 5});
    CHECK(b.segments()[2] == Segment{48, 16, 2});
    CHECK(b.cardinality() == 9);
    CHECK(b.min() == 0);
    CHECK(b.max() == 64);
}

TEST_CASE("singletons use step 1") {
    const APSet s = APSet::from_values({5});
    REQUIRE(s.segments().size() == 1);
    CHECK(s.segments()[0] == Segment{5, 1, 1});
    CHECK(APSet::single(5) == s);
}

TEST_CASE("canonical form is input-order and duplicate independent") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto base = random_set(rng, 4096, 1 + rng() % 50);
        std::vector<std::uint64_t> shuffled(base.begin(), base.end());
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        shuffled.insert(shuffled.end(), base.begin(), base.end());  // duplicates
        CHECK(APSet::from_values(shuffled) == from_set(base));
    }
}

TEST_CASE("range constructor") {
    CHECK(APSet::range(12, 52, 2) == APSet::from_values([] {
              std::vector<std::uint64_t> v;
              for (std::uint64_t w = 12; w <= 52; w += 2) v.push_back(w);
              return v;
          }()));
    CHECK(APSet::range(10, 9, 2).empty());
    CHECK(APSet::range(3, 3, 5) == APSet::single(3));
    // last need not be hit exactly
    CHECK(APSet::range(0, 7, 3) == APSet::from_values({0, 3, 6}));
}

TEST_CASE("contains and contains_all") {
    const APSet s = APSet::from_values({0, 16, 24, 28, 32, 36, 40, 48, 64});
    CHECK(s.contains(0));
    CHECK(s.contains(36));
    CHECK(!s.contains(44));
    CHECK(!s.contains(65));
    CHECK(s.contains_all(APSet::from_values({16, 32, 64})));
    CHECK(!s.contains_all(APSet::from_values({16, 44})));
    CHECK(s.contains_all(APSet{}));
}

TEST_CASE("empty set accessors throw") {
    const APSet e;
    CHECK(e.empty());
    CHECK(e.cardinality() == 0);
    CHECK_THROWS_AS(e.min(), std::logic_error);
    CHECK_THROWS_AS(e.max(), std::logic_error);
}

TEST_CASE("members respects the expansion bound") {
    const APSet big = APSet::range(0, std::uint64_t{1} << 40, 2);
    CHECK_THROWS_AS(big.members(1 << 20), std::length_error);
    CHECK(APSet::range(0, 100, 10).members(11).size() == 11);
}

TEST_CASE("set operations match brute-force oracles") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto xs = random_set(rng, 2000, 1 + rng() % 40);
        const auto ys = random_set(rng, 2000, 1 + rng() % 40);
        const APSet a = from_set(xs);
        const APSet b = from_set(ys);

        std::set<std::uint64_t> u = xs, d, inter, sums;
        u.insert(ys.begin(), ys.end());
        for (auto x : xs)
            if (!ys.count(x)) d.insert(x);
        for (auto x : xs)
            if (ys.count(x)) inter.insert(x);
        for (auto x : xs)
            for (auto y : ys) sums.insert(x + y);

        CHECK(set_union(a, b) == from_set(u));
        CHECK(set_difference(a, b) == from_set(d));
        CHECK(set_intersection(a, b) == from_set(inter));
        CHECK(sumset(a, b) == from_set(sums));

        std::set<std::uint64_t> refl;
        for (auto x : xs) refl.insert(4000 - x);
        CHECK(reflect(a, 4000) == from_set(refl));

        std::set<std::uint64_t> mult;
        for (auto x : xs)
            if (x % 4 == 0) mult.insert(x);
        CHECK(filter_multiples(a, 4) == from_set(mult));
    }
}

TEST_CASE("sumset merges equal-step segments") {
    const std::uint64_t big = 1'000'000;
    const APSet a = APSet::range(0, 8 * (big - 1), 8);
    const APSet s = sumset(a, a);
    REQUIRE(s.segments().size() == 1);
    CHECK(s.segments()[0] == Segment{0, 8, 2 * big - 1});
}

TEST_CASE("sumset overflow detection") {
    const APSet a = APSet::single(~std::uint64_t{0});
    CHECK_THROWS_AS(sumset(a, a), std::overflow_error);
}

TEST_CASE("reflect rejects out-of-range values") {
    CHECK_THROWS_AS(reflect(APSet::single(10), 9), std::domain_error);
}

TEST_CASE("empty-set edge cases") {
    const APSet e;
    const APSet a = APSet::from_values({1, 2, 3});
    CHECK(set_union(e, a) == a);
    CHECK(set_difference(a, e) == a);
    CHECK(set_difference(e, a) == e);
    CHECK(set_intersection(e, a) == e);
    CHECK(sumset(e, a) == e);
    CHECK(reflect(e, 5) == e);
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const APSet a = from_set(random_set(rng, 5000, 1 + rng() % 60));
        CHECK(APSet::from_json(a.to_json()) == a);
    }
    const APSet e;
    CHECK(APSet::from_json(e.to_json()) == e);
}

TEST_CASE("to_string is stable and readable") {
    const APSet a = APSet::from_values({12, 14, 16, 25});
    CHECK(a.to_string() == "{12..16 step 2, 25}");
    CHECK(APSet{}.to_string() == "{}");
}
