#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "trc/cosets.hpp"

using namespace trc;

TEST_CASE("cyclotomic cosets for (2,1,4)") {
    const CosetFamily fam = cyclotomic_cosets(2, 1, 4);
    CHECK(fam.modulus == 255);
    CHECK(fam.base == 4);
    CHECK(fam.cosets[0].members == std::vector<std::uint64_t>{0});
    CHECK(fam.cosets[1].members == std::vector<std::uint64_t>{1, 4, 16, 64});
    CHECK(fam.cosets[2].members == std::vector<std::uint64_t>{2, 8, 32, 128});
    // orbit computation; the multiply-by-4 closure fixes the two listings that
    // violate it (3,12,48,192 and 6,24,96,129)
    CHECK(fam.cosets[3].members == std::vector<std::uint64_t>{3, 12, 48, 192});
    CHECK(fam.cosets[4].members == std::vector<std::uint64_t>{5, 20, 65, 80});
    CHECK(fam.cosets[5].members == std::vector<std::uint64_t>{6, 24, 96, 129});
    CHECK(fam.cosets[6].members == std::vector<std::uint64_t>{7, 28, 112, 193});
    CHECK(fam.cosets[7].members == std::vector<std::uint64_t>{9, 36, 66, 144});
    CHECK(fam.reps[8] == 10);

    // partition of {0} u {1..254}
    std::vector<bool> seen(255, false);
    std::size_t total = 0;
    for (const auto& c : fam.cosets) {
        for (auto m : c.members) {
            CHECK(!seen[m]);
            seen[m] = true;
            ++total;
        }
        CHECK(c.rep == c.members.front());
        // closure under multiplication by the base
        for (auto m : c.members) {
            const std::uint64_t im = m * fam.base % fam.modulus;
            CHECK(std::find(c.members.begin(), c.members.end(), im) != c.members.end());
        }
        // coset sizes divide r/s
        CHECK(4 % c.size() == 0);
    }
    CHECK(total == 255);
}

TEST_CASE("invalid tower rejected") { CHECK_THROWS_AS(cyclotomic_cosets(2, 3, 4), InvalidTower); }

TEST_CASE("delta_sigma unions") {
    const CosetFamily fam = cyclotomic_cosets(2, 1, 4);
    CHECK(delta_sigma(fam, 0).members == std::vector<std::uint64_t>{0});
    CHECK(delta_sigma(fam, 1).members == std::vector<std::uint64_t>{0, 1, 4, 16, 64});
    const ExponentSet d6 = delta_sigma(fam, 6);
    CHECK(d6.members.size() == 25);
    CHECK(d6.closed_under_base);
    for (auto m : d6.members)
        CHECK(std::binary_search(d6.members.begin(), d6.members.end(), m * fam.base % fam.modulus));

    CHECK(delta_sigma_nonzero(fam, 1).members == std::vector<std::uint64_t>{1, 4, 16, 64});
    CHECK_THROWS_AS(delta_sigma_nonzero(fam, 0), EmptyDelta);
    CHECK_THROWS_AS(delta_sigma(fam, 100000), IndexOutOfRange);
}

TEST_CASE("trace bound values") {
    CHECK(trace_bound(2, 4) == 15);
    CHECK(trace_bound(2, 1) == 1);
    CHECK(trace_bound(3, 2) == 5);
    CHECK(trace_bound(4, 2) == 11);
    CHECK(trace_bound(3, 3) == 14);
    CHECK(trace_bound(5, 2) == 14);
    CHECK(trace_bound(7, 2) == 27);
    CHECK(trace_bound(2, 2) == 3);
}

TEST_CASE("max admissible t") {
    const CosetFamily f24 = cyclotomic_cosets(2, 1, 4);
    // reps below 15: 0,1,2,3,5,6,7,9,10,11,13,14
    CHECK(max_admissible_t(f24, 2, 4) == 11);
    CHECK(f24.reps[11] == 14);
    CHECK(f24.reps[12] == 15);

    const CosetFamily f31 = cyclotomic_cosets(3, 1, 2);
    // bound is 5; reps 0..4 qualify
    CHECK(max_admissible_t(f31, 3, 2) == 4);

    const CosetFamily f21 = cyclotomic_cosets(2, 1, 1);
    CHECK(max_admissible_t(f21, 2, 1) == 0);
}

TEST_CASE("partition invariant across specs") {
    for (auto [p, s, r] : {std::tuple<int, int, int>{3, 1, 2}, {2, 2, 4}, {5, 1, 2}}) {
        const CosetFamily fam = cyclotomic_cosets(p, s, r);
        std::size_t total = 0;
        for (const auto& c : fam.cosets) {
            total += c.size();
            CHECK(static_cast<std::uint64_t>(r / s) % c.size() == 0);
        }
        CHECK(total == fam.modulus);  // p^{2r}-1 members, counting the 0 coset once
    }
}
