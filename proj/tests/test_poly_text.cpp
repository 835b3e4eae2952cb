#include <doctest.h>

#include "sgqc/poly_text.hpp"
#include "test_util.hpp"

using namespace sgqc;

TEST_CASE("basic parses") {
    SkewRing R = SkewRing::fq(FieldSpec::get(2, 2), 1);
    const FieldSpec& F = *R.field;
    FieldElement t = F.primitive();

    SkewPoly p = parse_poly(R, "x^2 + x + t");
    REQUIRE(p.degree() == 2);
    CHECK(p.coeff(0) == SElement::from_field(t));
    CHECK(p.coeff(1) == SElement::one(F));
    CHECK(p.coeff(2) == SElement::one(F));

    CHECK(parse_poly(R, "0").is_zero());
    CHECK(parse_poly(R, "x^4-1") == SkewPoly::x_pow_minus_one(R, 4));
    CHECK(parse_poly(R, "t^2*x^3") == parse_poly(R, "(t+1)*x^3")); // t^2 = t+1 in F_4
    CHECK(parse_poly(R, "2") .is_zero());                           // 2 = 0 in characteristic 2
}

TEST_CASE("S-coefficient parses") {
    SkewRing RS = SkewRing::s(FieldSpec::get(3, 1), 1);
    const FieldSpec& F3 = *RS.field;
    // the first reference-table generator: (2v+2) + 2x + (v+1)x^2 + x^3
    SkewPoly p = parse_poly(RS, "((2)+v*(2)) + 2*x + ((1)+v*(1))*x^2 + x^3");
    REQUIRE(p.degree() == 3);
    CHECK(p.coeff(0) == SElement(F3.from_int(2), F3.from_int(2)));
    CHECK(p.coeff(1) == SElement::from_field(F3.from_int(2)));
    CHECK(p.coeff(2) == SElement(F3.one(), F3.one()));
    CHECK(p.coeff(3) == SElement::one(F3));
}

TEST_CASE("errors carry positions and ring checks") {
    SkewRing R3 = SkewRing::fq(FieldSpec::get(3, 1), 1);
    CHECK_THROWS_AS(parse_poly(R3, "t + 1"), ParseError);   // no t over a prime field
    CHECK_THROWS_AS(parse_poly(R3, "x^2 +"), ParseError);
    CHECK_THROWS_AS(parse_poly(R3, "x^2 ) 1"), ParseError);
    CHECK_THROWS_AS(parse_poly(R3, "((1)+v*(2))*x"), ParseError); // v-part in an F_q ring

    try {
        parse_poly(R3, "x^2 + @");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 6);
    }
}

TEST_CASE("render: canonical descending form") {
    SkewRing R = SkewRing::fq(FieldSpec::get(2, 2), 1);
    CHECK(render_poly(parse_poly(R, "t + x + x^2")) == "x^2 + x + t");
    CHECK(render_poly(SkewPoly::zero(R)) == "0");
    CHECK(render_poly(SkewPoly::one(R)) == "1");
    CHECK(render_poly(parse_poly(R, "x^4 - 1")) == "x^4 + 1");

    SkewRing RS = SkewRing::s(FieldSpec::get(3, 1), 1);
    CHECK(render_poly(parse_poly(RS, "((2)+v*(2)) + 2*x + x^3")) ==
          "x^3 + 2*x + ((2)+v*(2))");
}

TEST_CASE("round trip: render(parse) is idempotent") {
    for (SkewRing R : {SkewRing::fq(FieldSpec::get(2, 2), 1), SkewRing::s(FieldSpec::get(3, 2), 1),
                       SkewRing::s(FieldSpec::get(2, 2), 1)}) {
        auto gen = test::rng(31 + R.field->q() + (R.tag == RingTag::S ? 1 : 0));
        for (int trial = 0; trial < 300; ++trial) {
            SkewPoly p = test::random_poly(R, 6, gen);
            std::string text = render_poly(p);
            SkewPoly q = parse_poly(R, text);
            CHECK(q == p);
            CHECK(render_poly(q) == text);
        }
    }
}

TEST_CASE("primitive-element override") {
    SkewRing R = SkewRing::fq(FieldSpec::get(3, 2), 1);
    const FieldSpec& F9 = *R.field;
    FieldElement t3 = F9.primitive().pow(3); // another generator
    SkewPoly p = parse_poly(R, "t*x + t^2", t3);
    CHECK(p.coeff(1) == SElement::from_field(t3));
    CHECK(p.coeff(0) == SElement::from_field(t3 * t3));
}

TEST_CASE("field and S literals") {
    const FieldSpec& F9 = FieldSpec::get(3, 2);
    CHECK(parse_field_literal(F9, "t^4") == F9.from_int(2));
    CHECK(parse_field_literal(F9, "2*t + 1") == F9.from_coeffs({1, 2}));
    SElement s = parse_s_literal(F9, "(1)+v*(2)");
    CHECK(s == SElement(F9.one(), F9.from_int(2)));
    CHECK(parse_s_literal(F9, "t") == SElement::from_field(F9.primitive()));
}
