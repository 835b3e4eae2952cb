#include <doctest.h>

#include "sgqc/poly_text.hpp"
#include "sgqc/skew_poly.hpp"
#include "test_util.hpp"

using namespace sgqc;

namespace {

SkewRing f4_ring() { return SkewRing::fq(FieldSpec::get(2, 2), 1); }
SkewRing f9_ring() { return SkewRing::fq(FieldSpec::get(3, 2), 1); }
SkewRing f4v_ring() { return SkewRing::s(FieldSpec::get(2, 2), 1); }

// Independent right-division route: solve the coefficient recurrence for
// the quotient top-down without repeated polynomial subtraction.
DivisionResult right_divide_by_recurrence(const SkewPoly& a, const SkewPoly& b) {
    const SkewRing ring = a.ring();
    Automorphism th = ring.aut();
    const int da = a.degree(), db = b.degree();
    if (da < db) return {SkewPoly::zero(ring), a, DivisionResult::Side::Right};
    const unsigned m = static_cast<unsigned>(da - db);
    std::vector<SElement> q(m + 1, ring.zero());
    auto theta_pow = [&](const SElement& e, unsigned k) {
        SElement out = e;
        for (unsigned i = 0; i < k % th.order(); ++i) out = theta_s(out, th);
        return out;
    };
    for (unsigned jj = m + 1; jj-- > 0;) {
        // coefficient of x^{db+jj} in q*b: sum_i q_i theta^i(b_{db+jj-i})
        SElement acc = ring.zero();
        for (unsigned i = jj + 1; i <= m; ++i) {
            int bidx = static_cast<int>(db + jj) - static_cast<int>(i);
            if (bidx < 0) continue;
            acc = acc + q[i] * theta_pow(b.coeff(static_cast<unsigned>(bidx)), i);
        }
        SElement need = a.coeff(db + jj) - acc;
        q[jj] = need * theta_pow(b.leading(), jj).inverse();
    }
    SkewPoly quot(ring, q);
    SkewPoly rem = a - quot * b;
    return {quot, rem, DivisionResult::Side::Right};
}

} // namespace

TEST_CASE("twisted multiplication") {
    SkewRing R = f4_ring();
    FieldElement t = R.field->primitive();
    SkewPoly tx(R, {SElement::zero(*R.field), SElement::from_field(t)});
    // (tx)(tx) = t theta(t) x^2 = t t^2 x^2 = x^2
    CHECK(tx * tx == SkewPoly::x_pow(R, 2));

    // noncommutativity witness: x t = t^2 x != t x
    SkewPoly xpoly = SkewPoly::x_pow(R, 1);
    SkewPoly tconst = SkewPoly::constant(R, SElement::from_field(t));
    SkewPoly xt = xpoly * tconst;
    SkewPoly tx2(R, {SElement::zero(*R.field), SElement::from_field(t * t)});
    CHECK(xt == tx2);
    CHECK(xt != tconst * xpoly);

    // identity
    SkewPoly f = parse_poly(R, "x^2 + t*x + 1");
    CHECK(SkewPoly::one(R) * f == f);
    CHECK(f * SkewPoly::one(R) == f);
}

TEST_CASE("factorization of x^4 - 1 over F_4") {
    SkewRing R = f4_ring();
    SkewPoly lhs = parse_poly(R, "x^2 + x + t^2");
    SkewPoly rhs = parse_poly(R, "x^2 + x + t");
    CHECK(lhs * rhs == SkewPoly::x_pow_minus_one(R, 4));
}

TEST_CASE("right division") {
    SkewRing R = f4_ring();
    SkewPoly x4m1 = SkewPoly::x_pow_minus_one(R, 4);
    SkewPoly g = parse_poly(R, "x^2 + x + t");
    DivisionResult d = right_divide(x4m1, g);
    CHECK(d.remainder.is_zero());
    CHECK(d.quotient == parse_poly(R, "x^2 + x + t^2"));

    SkewPoly f = parse_poly(R, "x^3 + t*x + 1");
    DivisionResult self = right_divide(f, f);
    CHECK(self.quotient == SkewPoly::one(R));
    CHECK(self.remainder.is_zero());

    // x^3 = (x^2 + x + 1)(x - 1) + 1 over F_4
    DivisionResult dd = right_divide(SkewPoly::x_pow(R, 3), parse_poly(R, "x + 1"));
    CHECK(dd.quotient == parse_poly(R, "x^2 + x + 1"));
    CHECK(dd.remainder == SkewPoly::one(R));

    CHECK_THROWS_AS(right_divide(f, SkewPoly::zero(R)), DivisionError);
    // non-unit leading coefficient over S
    SkewRing RS = f4v_ring();
    SkewPoly vpoly(RS, {SElement::zero(*RS.field), SElement::v(*RS.field)});
    CHECK_THROWS_AS(right_divide(SkewPoly::x_pow(RS, 2), vpoly), DivisionError);
}

TEST_CASE("left division") {
    SkewRing R = f4_ring();
    SkewPoly x4m1 = SkewPoly::x_pow_minus_one(R, 4);
    DivisionResult d = left_divide(x4m1, parse_poly(R, "x^2 + x + t^2"));
    CHECK(d.remainder.is_zero());
    CHECK(d.quotient == parse_poly(R, "x^2 + x + t"));

    SkewPoly f = parse_poly(R, "t^2*x^3 + x + t");
    DivisionResult one = left_divide(f, SkewPoly::one(R));
    CHECK(one.quotient == f);
    CHECK(one.remainder.is_zero());

    FieldElement t = R.field->primitive();
    SkewPoly b = parse_poly(R, "x + t");
    DivisionResult dd = left_divide(SkewPoly::x_pow(R, 2), b);
    CHECK(b * dd.quotient + dd.remainder == SkewPoly::x_pow(R, 2));
    CHECK(dd.remainder.degree() < b.degree());
}

TEST_CASE("division reconstruction property (1000 random cases per ring)") {
    for (SkewRing R : {f4_ring(), f9_ring(), f4v_ring()}) {
        auto gen = test::rng(53710 + R.field->q());
        for (int trial = 0; trial < 1000; ++trial) {
            SkewPoly a = test::random_poly(R, 8, gen);
            SkewPoly b = test::random_unit_lead_poly(R, 1 + trial % 5, gen);
            DivisionResult r = right_divide(a, b);
            CHECK(r.quotient * b + r.remainder == a);
            CHECK(r.remainder.degree() < b.degree());
            DivisionResult l = left_divide(a, b);
            CHECK(b * l.quotient + l.remainder == a);
            CHECK(l.remainder.degree() < b.degree());
        }
    }
}

TEST_CASE("two right-division routes agree") {
    for (SkewRing R : {f4_ring(), f9_ring(), f4v_ring()}) {
        auto gen = test::rng(1234 + R.field->q());
        for (int trial = 0; trial < 300; ++trial) {
            SkewPoly a = test::random_poly(R, 7, gen);
            SkewPoly b = test::random_unit_lead_poly(R, 1 + trial % 4, gen);
            DivisionResult r1 = right_divide(a, b);
            DivisionResult r2 = right_divide_by_recurrence(a, b);
            CHECK(r1.quotient == r2.quotient);
            CHECK(r1.remainder == r2.remainder);
        }
    }
}

TEST_CASE("twist coherence: x * c = theta(c) * x (exhaustive over F_4 and F_9)") {
    for (SkewRing R : {f4_ring(), f9_ring()}) {
        Automorphism th = R.aut();
        SkewPoly xpoly = SkewPoly::x_pow(R, 1);
        for (unsigned i = 0; i < R.field->q(); ++i) {
            SElement c = SElement::from_field(R.field->element(static_cast<std::uint16_t>(i)));
            SkewPoly lhs = xpoly * SkewPoly::constant(R, c);
            SkewPoly rhs = SkewPoly::constant(R, theta_s(c, th)) * xpoly;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("gcrd") {
    SkewRing R = f4_ring();
    SkewPoly f = parse_poly(R, "t*x^3 + x + t^2");
    CHECK(gcrd(f, SkewPoly::zero(R)) == f.monic());

    // distinct right factors of x^4 - 1 sharing no common right divisor
    SkewPoly a = parse_poly(R, "x^2 + x + t");
    SkewPoly b = parse_poly(R, "x^2 + x + t^2");
    CHECK(gcrd(a, b) == SkewPoly::one(R));
    // cross-check by exhaustive search over monic degree-1 right divisors
    for (unsigned i = 0; i < 4; ++i) {
        SkewPoly lin(R, {SElement::from_field(R.field->element(static_cast<std::uint16_t>(i))),
                         SElement::one(*R.field)});
        bool divides_both = right_divide(a, lin).remainder.is_zero() &&
                            right_divide(b, lin).remainder.is_zero();
        CHECK_FALSE(divides_both);
    }

    CHECK(gcrd(SkewPoly::x_pow_minus_one(R, 4), a) == a);
}

TEST_CASE("lclm") {
    SkewRing R = f4_ring();
    // the worked example: lclm(x^2+1, x^3+1) = x^4 + x^3 + x + 1
    SkewPoly m = lclm(parse_poly(R, "x^2 + 1"), parse_poly(R, "x^3 + 1"));
    CHECK(m == parse_poly(R, "x^4 + x^3 + x + 1"));
    CHECK(right_divide(m, parse_poly(R, "x^2 + 1")).remainder.is_zero());
    CHECK(right_divide(m, parse_poly(R, "x^3 + 1")).remainder.is_zero());

    SkewPoly f = parse_poly(R, "t*x^2 + x + 1");
    CHECK(lclm(f, f) == f.monic());

    // commutative case over F_3
    SkewRing R3 = SkewRing::fq(FieldSpec::get(3, 1), 1);
    SkewPoly l = lclm(parse_poly(R3, "x + 2"), parse_poly(R3, "x + 1"));
    CHECK(l == parse_poly(R3, "x^2 + 2"));
    // exhaustive: x^2 - 1 is the only monic degree-2 common left multiple
    for (unsigned c0 = 0; c0 < 3; ++c0) {
        for (unsigned c1 = 0; c1 < 3; ++c1) {
            SkewPoly cand(R3, {SElement::from_field(R3.field->element(c0)),
                               SElement::from_field(R3.field->element(c1)),
                               SElement::one(*R3.field)});
            bool common = right_divide(cand, parse_poly(R3, "x + 2")).remainder.is_zero() &&
                          right_divide(cand, parse_poly(R3, "x + 1")).remainder.is_zero();
            CHECK(common == (cand == l));
        }
    }
}

TEST_CASE("gcrd/lclm degree identity (randomized over F_q)") {
    for (SkewRing R : {f4_ring(), f9_ring()}) {
        auto gen = test::rng(99 + R.field->q());
        for (int trial = 0; trial < 1000; ++trial) {
            SkewPoly a = test::random_unit_lead_poly(R, 1 + trial % 5, gen);
            SkewPoly b = test::random_unit_lead_poly(R, 1 + (trial / 2) % 5, gen);
            ExtendedGcrd e = extended_gcrd(a, b);
            CHECK(e.lclm.degree() + e.g.degree() == a.degree() + b.degree());
            CHECK(e.u * a + e.w * b == e.g);
            CHECK(right_divide(a, e.g).remainder.is_zero());
            CHECK(right_divide(b, e.g).remainder.is_zero());
            CHECK(right_divide(e.lclm, a).remainder.is_zero());
            CHECK(right_divide(e.lclm, b).remainder.is_zero());
        }
    }
}

TEST_CASE("is_right_divisor") {
    SkewRing RS = f4v_ring();
    CHECK(is_right_divisor(parse_poly(RS, "x^2 + 1"), SkewPoly::x_pow_minus_one(RS, 4)));
    SkewPoly f = parse_poly(RS, "x^3 + ((t)+v*(1))*x + 1");
    CHECK(is_right_divisor(f, f));

    SkewRing R = f4_ring();
    SkewPoly g = parse_poly(R, "x + t");
    SkewPoly x2m1 = SkewPoly::x_pow_minus_one(R, 2);
    bool by_remainder = is_right_divisor(g, x2m1);
    // cross-check by multiplying all monic degree-1 complements
    bool by_search = false;
    for (unsigned i = 0; i < 4; ++i) {
        SkewPoly c(R, {SElement::from_field(R.field->element(static_cast<std::uint16_t>(i))),
                       SElement::one(*R.field)});
        if (c * g == x2m1) by_search = true;
    }
    CHECK(by_remainder == by_search);
}

TEST_CASE("enumerate_right_divisors") {
    SkewRing R3 = SkewRing::fq(FieldSpec::get(3, 1), 1);
    auto div21 = enumerate_right_divisors(R3, 2, 1);
    REQUIRE(div21.size() == 2);
    CHECK(div21[0] == parse_poly(R3, "x + 1"));
    CHECK(div21[1] == parse_poly(R3, "x + 2"));

    SkewRing R = f4_ring();
    CHECK(enumerate_right_divisors(R, 4, 0).size() == 1);

    auto div42 = enumerate_right_divisors(R, 4, 2);
    auto has = [&](const std::string& s) {
        SkewPoly p = parse_poly(R, s);
        for (const auto& d : div42)
            if (d == p) return true;
        return false;
    };
    CHECK(has("x^2 + x + t"));
    CHECK(has("x^2 + x + t^2"));
    CHECK(has("x^2 + t*x + t"));
    CHECK(has("x^2 + t^2*x + t"));
    CHECK(has("x^2 + 1"));
    // completeness: brute force over all 16 monic quadratics
    unsigned count = 0;
    for (unsigned c0 = 0; c0 < 4; ++c0)
        for (unsigned c1 = 0; c1 < 4; ++c1) {
            SkewPoly cand(R, {SElement::from_field(R.field->element(c0)),
                              SElement::from_field(R.field->element(c1)),
                              SElement::one(*R.field)});
            if (right_divide(SkewPoly::x_pow_minus_one(R, 4), cand).remainder.is_zero()) ++count;
        }
    CHECK(div42.size() == count);

    CHECK_THROWS_AS(enumerate_right_divisors(R, 30, 20, 1000), BudgetError);
}

TEST_CASE("CRT split and join of polynomials") {
    SkewRing RS = f4v_ring();
    auto gen = test::rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        SkewPoly p = test::random_poly(RS, 6, gen);
        auto [p1, p2] = crt_split(p);
        CHECK(crt_join(p1, p2) == p);
        SkewPoly q = test::random_poly(RS, 6, gen);
        auto [q1, q2] = crt_split(q);
        // multiplication is componentwise across the CRT split
        auto [r1, r2] = crt_split(p * q);
        CHECK(r1 == p1 * q1);
        CHECK(r2 == p2 * q2);
    }
}

TEST_CASE("monic normalization preserves the left ideal") {
    SkewRing R = f9_ring();
    auto gen = test::rng(23);
    SkewPoly f = test::random_unit_lead_poly(R, 4, gen);
    SkewPoly m = f.monic();
    CHECK(m.is_monic());
    CHECK(right_divide(f, m).remainder.is_zero());
    CHECK(right_divide(m, f).remainder.is_zero());
}
