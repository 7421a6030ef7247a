#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "trc/serialization.hpp"
#include "trc/subfield.hpp"

using namespace trc;

namespace {

struct Lcg {
    std::uint64_t state;
    std::uint32_t next(std::uint32_t bound) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<std::uint32_t>((state >> 33) % bound);
    }
};

}  // namespace

TEST_CASE("code file round trip over GF(4)") {
    auto f4 = Field::create(2, 2);
    Lcg rng{8};
    Matrix g(f4, 4, 10);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 10; ++j) g.at(i, j) = rng.next(4);
    std::ostringstream os;
    write_code(os, g);
    std::istringstream is(os.str());
    const Matrix back = parse_code(is, f4);
    CHECK(back == g);
}

TEST_CASE("round trip without a field hint infers the field") {
    auto f9 = Field::create(3, 2);
    Lcg rng{15};
    Matrix g(f9, 3, 7);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 7; ++j) g.at(i, j) = rng.next(9);
    std::ostringstream os;
    write_code(os, g);
    std::istringstream is(os.str());
    const Matrix back = parse_code(is);
    CHECK(back.field()->size() == 9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 7; ++j) {
            // same element up to the shared Conway representation
            CHECK(back.at(i, j) == g.at(i, j));
        }
}

TEST_CASE("prime field digits") {
    auto f5 = Field::create(5, 1);
    Matrix g(f5, 2, 4);
    g.at(0, 0) = 3;
    g.at(1, 3) = 4;
    std::ostringstream os;
    write_code(os, g);
    CHECK(os.str() == "5 4 2\n3 0 0 0\n0 0 0 4\n");
    std::istringstream is(os.str());
    CHECK(parse_code(is, f5) == g);
}

TEST_CASE("malformed files are rejected with positions") {
    auto f4 = Field::create(2, 2);
    {
        std::istringstream is("4 3\n");
        CHECK_THROWS_AS(parse_code(is, f4), MalformedFile);
    }
    {
        std::istringstream is("4 3 2\n1 2 3\n1 2\n");
        CHECK_THROWS_WITH_AS(parse_code(is, f4), doctest::Contains("line 3"), MalformedFile);
    }
    {
        std::istringstream is("4 3 1\n1 2 3 1\n");
        CHECK_THROWS_WITH_AS(parse_code(is, f4), doctest::Contains("column 4"), MalformedFile);
    }
    {
        // header/body mismatch: symbol 5 exceeds q-1 = 3
        std::istringstream is("4 3 1\n1 5 3\n");
        CHECK_THROWS_AS(parse_code(is, f4), MalformedFile);
    }
}

TEST_CASE("serialized subfield code re-parses with the expected rank") {
    TraceSpec spec(2, 1, 4);
    const auto z = make_points(spec, PointKind::trace_roots);
    const SubfieldCode code = subfield_subcode(spec, delta_sigma(spec.cosets, 6), z);
    std::ostringstream os;
    write_code(os, code.g_sub);
    std::istringstream is(os.str());
    const Matrix back = parse_code(is, spec.sub);
    CHECK(rank(back) == 24);
}

TEST_CASE("catalog append and verify") {
    const std::string path = "test_catalog_tmp.jsonl";
    std::remove(path.c_str());
    CodeRecord rec;
    rec.family = "stabilizer";
    rec.p = 2;
    rec.s = 1;
    rec.r = 4;
    rec.t = 6;
    rec.points_kind = "z";
    rec.n = 128;
    rec.k = 80;
    rec.d_designed = 10;
    catalog_append(path, rec);
    rec.k = 79;
    rec.derivations = "subcode x1";
    catalog_append(path, rec);
    CHECK(catalog_verify(path) == 2);

    // tampering breaks the checksum
    {
        std::ifstream in(path);
        std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        in.close();
        auto pos = all.find("\"k\":80");
        REQUIRE(pos != std::string::npos);
        all.replace(pos, 6, "\"k\":81");
        std::ofstream out(path, std::ios::trunc);
        out << all;
    }
    CHECK_THROWS_AS(catalog_verify(path), MalformedFile);
    std::remove(path.c_str());
}
