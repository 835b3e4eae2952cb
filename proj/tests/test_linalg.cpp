#include <doctest.h>

#include <set>

#include "sgqc/linalg.hpp"
#include "test_util.hpp"

using namespace sgqc;

TEST_CASE("rref basis over F_4") {
    const FieldSpec& F = FieldSpec::get(2, 2);
    FieldElement t = F.primitive();
    RrefBasis b(F, 3);
    FqVec r1{F.one(), t, F.zero()};
    FqVec r2{F.zero(), F.one(), t};
    CHECK(b.insert(r1));
    CHECK(b.insert(r2));
    FqVec dep(3, F.zero());
    for (int j = 0; j < 3; ++j) dep[j] = t * r1[j] + r2[j];
    CHECK_FALSE(b.insert(dep));
    CHECK(b.rank() == 2);
    CHECK(b.contains(dep));
    CHECK_FALSE(b.contains({F.one(), F.zero(), F.one()}));
}

TEST_CASE("coordinates recover the inserted combination") {
    const FieldSpec& F = FieldSpec::get(3, 2);
    auto gen = test::rng(11);
    RrefBasis b(F, 6);
    FqMat inserted;
    for (int i = 0; i < 4; ++i) {
        FqVec v;
        for (int j = 0; j < 6; ++j) v.push_back(test::random_element(F, gen));
        b.insert(v);
        inserted.push_back(v);
    }
    for (int trial = 0; trial < 50; ++trial) {
        FqVec target(6, F.zero());
        std::vector<FieldElement> lambda;
        for (std::size_t i = 0; i < inserted.size(); ++i) {
            FieldElement c = test::random_element(F, gen);
            lambda.push_back(c);
            for (int j = 0; j < 6; ++j) target[j] = target[j] + c * inserted[i][j];
        }
        auto coords = b.coordinates(target);
        REQUIRE(coords.has_value());
        FqVec back(6, F.zero());
        for (std::size_t i = 0; i < coords->size(); ++i)
            for (int j = 0; j < 6; ++j) back[j] = back[j] + (*coords)[i] * inserted[i][j];
        CHECK(back == target);
    }
}

TEST_CASE("nullspace is the annihilator of the row space") {
    const FieldSpec& F = FieldSpec::get(2, 2);
    auto gen = test::rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        FqMat rows;
        for (int i = 0; i < 3; ++i) {
            FqVec v;
            for (int j = 0; j < 6; ++j) v.push_back(test::random_element(F, gen));
            rows.push_back(v);
        }
        RrefBasis rb(F, 6);
        for (const auto& r : rows) rb.insert(r);
        FqMat kernel = nullspace(rows, F, 6);
        CHECK(kernel.size() == 6 - rb.rank());
        for (const auto& u : kernel) {
            for (const auto& r : rows) {
                FieldElement acc = F.zero();
                for (int j = 0; j < 6; ++j) acc = acc + r[j] * u[j];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("minimum distance by enumeration") {
    const FieldSpec& F4 = FieldSpec::get(2, 2);
    // single row of weight w has distance w
    LinearCodeFq single = LinearCodeFq::from_rows(
        F4, 5, {{F4.one(), F4.zero(), F4.primitive(), F4.one(), F4.zero()}});
    CHECK(min_distance(single) == 3);

    // [8,1] repetition row over F_4 has distance 8
    FqVec ones(8, F4.one());
    LinearCodeFq rep = LinearCodeFq::from_rows(F4, 8, {ones});
    CHECK(min_distance(rep) == 8);

    // zero code: undefined distance
    LinearCodeFq zero = LinearCodeFq::from_rows(F4, 4, {});
    CHECK_FALSE(min_distance(zero).has_value());

    // budget refusal
    FqMat rows;
    for (int i = 0; i < 8; ++i) {
        FqVec v(10, F4.zero());
        v[i] = F4.one();
        rows.push_back(v);
    }
    LinearCodeFq big = LinearCodeFq::from_rows(F4, 10, rows);
    CHECK_THROWS_AS(min_distance(big, 100), BudgetError);
    CHECK(min_distance(big) == 1);
}

TEST_CASE("enumeration agrees with a direct scan") {
    // full F_3^3 via an identity basis: distance 1, and all 26 nonzero
    // words are visited exactly once by the Gray walk
    const FieldSpec& F3 = FieldSpec::get(3, 1);
    unsigned q = 3, k = 3;
    std::vector<unsigned> digits(k, 0);
    std::set<std::vector<unsigned>> seen;
    seen.insert(digits);
    gray_walk(q, k, [&](unsigned pos, unsigned oldv, unsigned newv) {
        CHECK(digits[pos] == oldv);
        digits[pos] = newv;
        CHECK(digits[pos] < q);
        CHECK(seen.insert(digits).second); // never revisited
    });
    CHECK(seen.size() == 27);
    (void)F3;
}

TEST_CASE("distance enumeration is deterministic") {
    const FieldSpec& F9 = FieldSpec::get(3, 2);
    auto gen = test::rng(3);
    FqMat rows;
    for (int i = 0; i < 4; ++i) {
        FqVec v;
        for (int j = 0; j < 10; ++j) v.push_back(test::random_element(F9, gen));
        rows.push_back(v);
    }
    LinearCodeFq code = LinearCodeFq::from_rows(F9, 10, rows);
    auto d1 = min_distance(code);
    auto d2 = min_distance(code);
    CHECK(d1 == d2);
    // cross-check against a naive full scan
    unsigned k = static_cast<unsigned>(code.k());
    std::vector<unsigned> digits(k, 0);
    unsigned best = 1000;
    for (;;) {
        unsigned pos = 0;
        while (pos < k && ++digits[pos] == 9) digits[pos++] = 0;
        if (pos == k) break;
        FqVec w(10, F9.zero());
        for (unsigned i = 0; i < k; ++i)
            for (int j = 0; j < 10; ++j)
                w[j] = w[j] + F9.element(static_cast<std::uint16_t>(digits[i])) * code.basis[i][j];
        unsigned wt = 0;
        for (const auto& e : w)
            if (!e.is_zero()) ++wt;
        if (wt && wt < best) best = wt;
    }
    CHECK(d1 == best);
}
