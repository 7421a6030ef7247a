#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "trc/presets.hpp"

using namespace trc;

namespace {

std::set<std::tuple<std::uint64_t, std::int64_t, std::uint64_t>> nk_set(
    const std::vector<PresetRow>& rows) {
    std::set<std::tuple<std::uint64_t, std::int64_t, std::uint64_t>> out;
    for (const auto& r : rows) out.insert({r.record.n, r.record.k, r.record.d_designed});
    return out;
}

}  // namespace

TEST_CASE("preset names") {
    CHECK(is_preset_name("t3"));
    CHECK(!is_preset_name("t7"));
    CHECK_THROWS_AS(run_preset("bogus"), IndexOutOfRange);
}

TEST_CASE("preset t1: classical records and shortening chains") {
    const auto rows = run_preset("t1");
    const auto set = nk_set(rows);
    // the three base records
    CHECK(set.count({128, 85, 16}));
    CHECK(set.count({128, 79, 20}));
    CHECK(set.count({128, 75, 22}));
    // first shortening of each family
    CHECK(set.count({127, 84, 16}));
    CHECK(set.count({127, 78, 20}));
    CHECK(set.count({127, 74, 22}));
    // chain tails
    CHECK(set.count({122, 79, 16}));
    CHECK(set.count({105, 56, 20}));
    CHECK(set.count({108, 55, 22}));
    // base rows carry materialized generators
    std::size_t with_gen = 0;
    for (const auto& r : rows)
        if (r.generator) ++with_gen;
    CHECK(with_gen == 3);
    CHECK(rows.size() == 3 + 6 + 23 + 20);
}

TEST_CASE("preset t2: stabilizer records and derivations") {
    const auto rows = run_preset("t2");
    const auto set = nk_set(rows);
    CHECK(set.count({128, 80, 10}));
    CHECK(set.count({128, 72, 11}));
    CHECK(set.count({128, 66, 12}));
    CHECK(set.count({128, 58, 14}));
    // derived rows
    CHECK(set.count({128, 79, 10}));
    CHECK(set.count({127, 80, 9}));
    CHECK(set.count({128, 71, 11}));
    CHECK(set.count({128, 65, 12}));
    CHECK(set.count({128, 64, 12}));
    CHECK(set.count({128, 63, 12}));
    CHECK(set.count({128, 57, 14}));
    CHECK(set.count({128, 56, 14}));
    CHECK(set.count({128, 55, 14}));
    CHECK(set.count({127, 58, 13}));
    CHECK(set.count({127, 57, 13}));
    CHECK(set.count({127, 56, 13}));
}

TEST_CASE("preset t3 sample rows") {
    const auto rows = run_preset("t3");
    const auto set = nk_set(rows);
    CHECK(set.count({64, 58, 3}));
    CHECK(set.count({64, 20, 14}));
    CHECK(set.count({63, 59, 2}));
    CHECK(set.count({192, 186, 3}));
    CHECK(set.count({192, 142, 14}));
    CHECK(rows.size() == 36);
    // rows beyond the admissibility bound are flagged
    std::size_t beyond = 0;
    for (const auto& r : rows)
        if (r.record.derivations == "certified-beyond-bound") ++beyond;
    CHECK(beyond == 6);  // t = 11, 12 in each of the three blocks
}

TEST_CASE("preset t4 sample rows") {
    const auto rows = run_preset("t4");
    const auto set = nk_set(rows);
    CHECK(set.count({243, 225, 5}));
    CHECK(set.count({243, 195, 11}));  // designed-distance jump over the missing rep 9
    CHECK(set.count({242, 220, 5}));
    CHECK(set.count({242, 196, 10}));
    CHECK(set.count({486, 466, 5}));
    CHECK(set.count({486, 400, 17}));
    CHECK(rows.size() == 36);
}

TEST_CASE("preset t5 sample rows") {
    const auto rows = run_preset("t5");
    const auto set = nk_set(rows);
    CHECK(set.count({125, 111, 5}));
    CHECK(set.count({125, 105, 7}));   // first surplus relation in the family
    CHECK(set.count({124, 108, 5}));
    CHECK(set.count({500, 462, 11}));
    CHECK(set.count({500, 418, 22}));
    CHECK(rows.size() == 36);
}

TEST_CASE("preset t6 sample rows") {
    const auto rows = run_preset("t6");
    const auto set = nk_set(rows);
    CHECK(set.count({342, 326, 5}));
    CHECK(set.count({342, 316, 8}));
    CHECK(set.count({342, 270, 20}));
    CHECK(set.count({2058, 2020, 11}));
    CHECK(set.count({2058, 1960, 26}));
    CHECK(rows.size() == 32);
}

TEST_CASE("record candidate scan locates the record families") {
    TraceSpec spec(2, 1, 4);
    const auto cands = scan_record_candidates(spec, 16, 22);
    bool found85 = false, found79 = false, found75 = false;
    for (const auto& c : cands) {
        if (c.designed_distance == 16 && c.dual_dim == 85) found85 = true;
        if (c.designed_distance == 20 && c.dual_dim == 79) found79 = true;
        if (c.designed_distance == 22 && c.dual_dim == 75) found75 = true;
    }
    CHECK(found85);
    CHECK(found79);
    CHECK(found75);
}
