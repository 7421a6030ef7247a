#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trc/gf.hpp"

using namespace trc;

namespace {

// independent exponentiation oracle: repeated squaring on top of mul only
std::uint32_t pow_oracle(const Field& F, std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = F.mul(r, base);
        base = F.mul(base, base);
        e >>= 1;
    }
    return r;
}

struct Lcg {
    std::uint64_t state;
    std::uint32_t next(std::uint32_t bound) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<std::uint32_t>((state >> 33) % bound);
    }
};

}  // namespace

TEST_CASE("prime field and small extensions construct") {
    auto f2 = Field::create(2, 1);
    CHECK(f2->size() == 2);
    CHECK(f2->modulus() == std::vector<std::uint32_t>{1, 1});

    auto f4 = Field::create(2, 2, std::vector<std::uint32_t>{1, 1, 1});
    CHECK(f4->size() == 4);

    auto f256 = Field::create(2, 8);
    CHECK(f256->size() == 256);
    CHECK(f256->conway_built());
    CHECK(f256->log_tables_present());
    // X itself is primitive for the shipped canonical moduli
    CHECK(f256->generator() == 2);
    CHECK(f256->element_order(2) == 255);
    auto f729 = Field::create(3, 6);
    CHECK(f729->generator() == 3);  // packed X in base 3
}

TEST_CASE("construction rejects bad inputs") {
    CHECK_THROWS_AS(Field::create(4, 2), NonPrimeCharacteristic);
    CHECK_THROWS_AS(Field::create(2, 2, std::vector<std::uint32_t>{1, 0, 1}), ReducibleModulus);  // x^2+1=(x+1)^2
    CHECK_THROWS_AS(Field::create(2, 2, std::vector<std::uint32_t>{1, 1}), ReducibleModulus);     // wrong degree
    CHECK_THROWS_AS(conway_polynomial(101, 7), MissingConwayEntry);
}

TEST_CASE("GF(4) multiplication table") {
    auto f4 = Field::create(2, 2);
    // omega = X (packed 2), omega^2 = packed 3 under x^2+x+1
    const std::uint32_t w = 2, w2 = f4->mul(w, w);
    CHECK(f4->mul(w, w2) == 1);  // omega^3 = 1
    CHECK(f4->add(w, w2) == 1);  // omega + omega^2 = 1
}

TEST_CASE("identities and Lagrange on GF(256)") {
    auto F = Field::create(2, 8);
    Lcg rng{42};
    for (int i = 0; i < 50; ++i) {
        const std::uint32_t a = rng.next(256);
        CHECK(F->add(a, 0) == a);
        if (a) {
            CHECK(F->pow(a, 255) == 1);
            CHECK(pow_oracle(*F, a, 255) == 1);
            CHECK(F->mul(a, F->inv(a)) == 1);
        }
        const std::uint32_t b = rng.next(256);
        CHECK(F->pow(a, 7) == pow_oracle(*F, a, 7));
        // Frobenius is a field automorphism
        for (std::uint32_t k : {1u, 3u}) {
            CHECK(F->frobenius(F->mul(a, b), k) == F->mul(F->frobenius(a, k), F->frobenius(b, k)));
            CHECK(F->frobenius(F->add(a, b), k) == F->add(F->frobenius(a, k), F->frobenius(b, k)));
        }
        // Frobenius order m
        CHECK(F->frobenius(F->frobenius(a, 3), 5) == a);
    }
    CHECK_THROWS_AS(F->inv(0), DivisionByZero);
    CHECK_THROWS_AS(F->div(1, 0), DivisionByZero);
}

TEST_CASE("frobenius basics") {
    auto f4 = Field::create(2, 2);
    const std::uint32_t w = 2;
    CHECK(f4->frobenius(w, 0) == w);
    CHECK(f4->frobenius(w, 1) == f4->mul(w, w));
}

TEST_CASE("trace GF(4) -> GF(2) and fiber counts on GF(256)") {
    auto f4 = Field::create(2, 2);
    // tr(omega) = omega + omega^2 = 1
    CHECK(f4->trace_raw(2, 1) == 1);
    CHECK(f4->trace_raw(0, 1) == 0);

    auto F = Field::create(2, 8);
    // the trace onto GF(2) takes each value exactly 128 times
    std::size_t zeros = 0, ones = 0;
    for (std::uint32_t a = 0; a < 256; ++a) {
        const std::uint32_t t = F->trace_raw(a, 1);
        CHECK((t == 0 || t == 1));
        (t == 0 ? zeros : ones)++;
    }
    CHECK(zeros == 128);
    CHECK(ones == 128);

    CHECK_THROWS_AS(F->trace_raw(1, 3), NonDivisorDegree);
}

TEST_CASE("trace additivity and subfield membership") {
    auto F = Field::create(3, 4);
    Lcg rng{7};
    for (int i = 0; i < 60; ++i) {
        const std::uint32_t a = rng.next(81), b = rng.next(81);
        CHECK(F->trace_raw(F->add(a, b), 2) == F->add(F->trace_raw(a, 2), F->trace_raw(b, 2)));
        const std::uint32_t t = F->trace_raw(a, 2);
        CHECK(F->frobenius(t, 2) == t);  // fixed by x -> x^(p^2)
    }
}

TEST_CASE("subfield embedding GF(4) into GF(256)") {
    auto f4 = Field::create(2, 2);
    auto F = Field::create(2, 8);
    SubfieldEmbedding e(f4, F);
    CHECK(e.embed(std::uint32_t{0}) == 0);
    CHECK(e.embed(std::uint32_t{1}) == 1);
    CHECK(F->dlog(e.image_of_sub_generator()) == 85);  // g^(255/3)
    CHECK(F->element_order(e.image_of_sub_generator()) == 3);

    Lcg rng{99};
    for (int i = 0; i < 40; ++i) {
        const std::uint32_t a = rng.next(4), b = rng.next(4);
        CHECK(e.embed(f4->add(a, b)) == F->add(e.embed(a), e.embed(b)));
        CHECK(e.embed(f4->mul(a, b)) == F->mul(e.embed(a), e.embed(b)));
        CHECK(e.try_project(e.embed(a)) == a);
    }
    // an element outside GF(4) does not project
    std::size_t misses = 0;
    for (std::uint32_t v = 0; v < 256; ++v)
        if (!e.try_project(v)) ++misses;
    CHECK(misses == 252);
}

TEST_CASE("trace_between lands in the subfield") {
    auto f4 = Field::create(2, 2);
    auto F = Field::create(2, 8);
    SubfieldEmbedding e(f4, F);
    for (std::uint32_t v = 0; v < 256; ++v) {
        const FieldElement a{F, v};
        const FieldElement t = trace_between(a, e);
        CHECK(t.field().get() == f4.get());
        // projecting back up and re-tracing is stable
        CHECK(F->trace_raw(v, 2) == e.embed(t.value()));
    }
}

TEST_CASE("field element wrapper enforces field identity") {
    auto f4 = Field::create(2, 2);
    auto f9 = Field::create(3, 2);
    FieldElement a{f4, 2}, b{f9, 2};
    CHECK_THROWS_AS((void)(a + b), FieldMismatch);
    FieldElement c{f4, 3};
    CHECK((a * c).value() == f4->mul(2, 3));
}

TEST_CASE("custom modulus field still works (non-Conway)") {
    // x^8+x^6+x^5+x^4+1, irreducible, used by the construction-independence suite
    auto F = Field::create(2, 8, std::vector<std::uint32_t>{1, 0, 0, 0, 1, 1, 1, 0, 1});
    CHECK(!F->conway_built());
    CHECK(F->log_tables_present());
    CHECK(F->element_order(F->generator()) == 255);
    auto f4 = Field::create(2, 2);
    SubfieldEmbedding e(f4, *&F);
    CHECK(F->element_order(e.image_of_sub_generator()) == 3);
    Lcg rng{1};
    for (int i = 0; i < 30; ++i) {
        const std::uint32_t a = rng.next(4), b = rng.next(4);
        CHECK(e.embed(f4->mul(a, b)) == F->mul(e.embed(a), e.embed(b)));
        CHECK(e.embed(f4->add(a, b)) == F->add(e.embed(a), e.embed(b)));
    }
}

TEST_CASE("table-free field agrees with the table-backed one") {
    // same field constructed below the table budget: arithmetic must agree
    auto fast = Field::create(3, 4);
    auto slow = Field::create(3, 4, std::nullopt, /*table_budget=*/16);
    CHECK(fast->log_tables_present());
    CHECK(!slow->log_tables_present());
    Lcg rng{2718};
    for (int i = 0; i < 60; ++i) {
        const std::uint32_t a = rng.next(81), b = rng.next(81);
        CHECK(fast->mul(a, b) == slow->mul(a, b));
        CHECK(fast->add(a, b) == slow->add(a, b));
        if (b) CHECK(fast->div(a, b) == slow->div(a, b));
        CHECK(fast->pow(a, 17) == slow->pow(a, 17));
        CHECK(fast->frobenius(a, 2) == slow->frobenius(a, 2));
        CHECK(fast->trace_raw(a, 2) == slow->trace_raw(a, 2));
    }
    CHECK_THROWS_AS(slow->dlog(1), TableBudgetExceeded);
}

TEST_CASE("odd characteristic arithmetic") {
    auto F = Field::create(7, 4);
    CHECK(F->size() == 2401);
    Lcg rng{5};
    for (int i = 0; i < 40; ++i) {
        const std::uint32_t a = rng.next(2401), b = rng.next(2401);
        CHECK(F->sub(F->add(a, b), b) == a);
        if (b) CHECK(F->mul(F->div(a, b), b) == a);
        CHECK(F->add(a, F->neg(a)) == 0);
    }
}
