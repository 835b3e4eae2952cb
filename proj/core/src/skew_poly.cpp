#include "sgqc/skew_poly.hpp"

#include <algorithm>

namespace sgqc {

namespace {

void check_same_ring(const SkewPoly& a, const SkewPoly& b) {
    if (a.ring() != b.ring())
        throw SpecMismatchError("skew polynomials from different rings");
}

void check_coeff(const SkewRing& ring, const SElement& c) {
    if (&c.spec() != ring.field)
        throw SpecMismatchError("coefficient from a different field spec");
    if (ring.tag == RingTag::Fq && !c.is_field())
        throw SpecMismatchError("coefficient with a v-part in an F_q polynomial ring");
}

} // namespace

SkewPoly::SkewPoly(SkewRing ring, std::vector<SElement> coeffs)
    : ring_(ring), coeffs_(std::move(coeffs)) {
    for (const SElement& c : coeffs_) check_coeff(ring_, c);
    trim();
}

void SkewPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SkewPoly SkewPoly::one(SkewRing ring) { return constant(ring, ring.one()); }

SkewPoly SkewPoly::constant(SkewRing ring, const SElement& c) {
    return SkewPoly(ring, std::vector<SElement>{c});
}

SkewPoly SkewPoly::x_pow(SkewRing ring, unsigned k) {
    std::vector<SElement> c(k + 1, ring.zero());
    c.back() = ring.one();
    return SkewPoly(ring, std::move(c));
}

SkewPoly SkewPoly::x_pow_minus_one(SkewRing ring, unsigned n) {
    std::vector<SElement> c(n + 1, ring.zero());
    c.front() = -ring.one();
    c.back() = ring.one();
    return SkewPoly(ring, std::move(c));
}

SkewPoly SkewPoly::from_field_coeffs(SkewRing ring, const std::vector<FieldElement>& coeffs) {
    std::vector<SElement> c;
    c.reserve(coeffs.size());
    for (const FieldElement& e : coeffs) c.push_back(SElement::from_field(e));
    return SkewPoly(ring, std::move(c));
}

bool SkewPoly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == ring_.one();
}

SElement SkewPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : ring_.zero();
}

const SElement& SkewPoly::leading() const {
    if (coeffs_.empty()) throw DivisionError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
    check_same_ring(*this, o);
    std::vector<SElement> c(std::max(coeffs_.size(), o.coeffs_.size()), ring_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = c[i] + coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] = c[i] + o.coeffs_[i];
    return SkewPoly(ring_, std::move(c));
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const { return *this + (-o); }

SkewPoly SkewPoly::operator-() const {
    std::vector<SElement> c = coeffs_;
    for (SElement& e : c) e = -e;
    return SkewPoly(ring_, std::move(c));
}

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
    check_same_ring(*this, o);
    if (is_zero() || o.is_zero()) return SkewPoly(ring_);
    Automorphism th = ring_.aut();
    std::vector<SElement> c(coeffs_.size() + o.coeffs_.size() - 1, ring_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            // (a x^i)(b x^j) = a theta^i(b) x^{i+j}
            SElement tb = o.coeffs_[j];
            for (unsigned k = 0; k < i % th.order(); ++k) tb = theta_s(tb, th);
            c[i + j] = c[i + j] + coeffs_[i] * tb;
        }
    }
    return SkewPoly(ring_, std::move(c));
}

bool SkewPoly::operator==(const SkewPoly& o) const {
    return ring_ == o.ring_ && coeffs_ == o.coeffs_;
}

SkewPoly SkewPoly::scale_left(const SElement& c) const {
    check_coeff(ring_.with_tag(RingTag::S), c);
    std::vector<SElement> out = coeffs_;
    for (SElement& e : out) e = c * e;
    SkewRing r = ring_;
    if (r.tag == RingTag::Fq && !c.is_field()) r.tag = RingTag::S;
    return SkewPoly(r, std::move(out));
}

SkewPoly SkewPoly::reduce_mod_xn_minus_1(unsigned n) const {
    if (n == 0) throw SizeError("reduction modulo x^0 - 1");
    std::vector<SElement> c(std::min<std::size_t>(coeffs_.size(), n), ring_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        std::size_t j = i % n;
        if (c.size() <= j) c.resize(j + 1, ring_.zero());
        c[j] = c[j] + coeffs_[i];
    }
    return SkewPoly(ring_, std::move(c));
}

SkewPoly SkewPoly::monic() const {
    if (is_zero()) throw DivisionError("monic normalization of the zero polynomial");
    if (is_monic()) return *this;
    if (!leading().is_unit())
        throw NonUnitError("monic normalization with non-unit leading coefficient " +
                           leading().to_string());
    return scale_left(leading().inverse());
}

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) { return f * g; }

namespace {

DivisionResult divide(const SkewPoly& a, const SkewPoly& b, DivisionResult::Side side) {
    check_same_ring(a, b);
    if (b.is_zero()) throw DivisionError("division by the zero polynomial");
    if (!b.leading().is_unit())
        throw DivisionError("division by a polynomial with non-unit leading coefficient " +
                            b.leading().to_string());
    const SkewRing ring = a.ring();
    Automorphism th = ring.aut();
    const int db = b.degree();
    SkewPoly q = SkewPoly::zero(ring);
    SkewPoly r = a;
    while (!r.is_zero() && r.degree() >= db) {
        unsigned k = static_cast<unsigned>(r.degree() - db);
        SElement c;
        if (side == DivisionResult::Side::Right) {
            // cancel with (c x^k) * b: c * theta^k(lead b) = lead r
            SElement tl = b.leading();
            for (unsigned i = 0; i < k % th.order(); ++i) tl = theta_s(tl, th);
            c = r.leading() * tl.inverse();
        } else {
            // cancel with b * (c x^k): lead(b) * theta^{deg b}(c) = lead r
            SElement raw = b.leading().inverse() * r.leading();
            // c = theta^{-deg b}(raw)
            long back = -static_cast<long>(db);
            c = SElement(th.apply_pow(raw.a(), back), th.apply_pow(raw.b(), back));
        }
        std::vector<SElement> mono(k + 1, ring.zero());
        mono.back() = c;
        SkewPoly term(ring, std::move(mono));
        q = q + term;
        r = side == DivisionResult::Side::Right ? r - term * b : r - b * term;
    }
    // reconstruction check
    SkewPoly back = side == DivisionResult::Side::Right ? q * b + r : b * q + r;
    if (back != a) throw DivisionError("division reconstruction failed (internal defect)");
    return {std::move(q), std::move(r), side};
}

} // namespace

DivisionResult right_divide(const SkewPoly& a, const SkewPoly& b) {
    return divide(a, b, DivisionResult::Side::Right);
}

DivisionResult left_divide(const SkewPoly& a, const SkewPoly& b) {
    return divide(a, b, DivisionResult::Side::Left);
}

ExtendedGcrd extended_gcrd(const SkewPoly& a, const SkewPoly& b) {
    check_same_ring(a, b);
    if (a.is_zero() && b.is_zero())
        throw DivisionError("gcrd of two zero polynomials");
    const SkewRing ring = a.ring();
    // r_i = u_i * a + w_i * b throughout the chain.
    SkewPoly r0 = a, r1 = b;
    SkewPoly u0 = SkewPoly::one(ring), w0 = SkewPoly::zero(ring);
    SkewPoly u1 = SkewPoly::zero(ring), w1 = SkewPoly::one(ring);
    while (!r1.is_zero()) {
        if (!r1.leading().is_unit())
            throw EuclideanChainError("gcrd undefined along Euclidean chain: non-unit leading coefficient " +
                                      r1.leading().to_string());
        DivisionResult d = right_divide(r0, r1);
        SkewPoly r2 = d.remainder;
        SkewPoly u2 = u0 - d.quotient * u1;
        SkewPoly w2 = w0 - d.quotient * w1;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        w0 = std::move(w1); w1 = std::move(w2);
    }
    ExtendedGcrd out{r0, u0, w0, SkewPoly::zero(ring)};
    if (!out.g.leading().is_unit())
        throw EuclideanChainError("gcrd undefined along Euclidean chain: non-unit leading coefficient " +
                                  out.g.leading().to_string());
    SElement lc_inv = out.g.leading().inverse();
    out.g = out.g.scale_left(lc_inv);
    out.u = out.u.scale_left(lc_inv);
    out.w = out.w.scale_left(lc_inv);
    // At termination u1*a + w1*b = 0, so u1*a = -w1*b is the lclm.
    if (!a.is_zero() && !b.is_zero()) {
        SkewPoly m = u1 * a;
        if (m.is_zero()) m = w1 * b;
        if (m.is_zero() || !m.leading().is_unit())
            throw EuclideanChainError("lclm undefined along Euclidean chain: degenerate cofactors");
        out.lclm = m.monic();
    }
    return out;
}

SkewPoly gcrd(const SkewPoly& a, const SkewPoly& b) {
    if (b.is_zero() && !a.is_zero()) return a.monic();
    if (a.is_zero() && !b.is_zero()) return b.monic();
    return extended_gcrd(a, b).g;
}

SkewPoly gcld(const SkewPoly& a, const SkewPoly& b) {
    check_same_ring(a, b);
    if (a.is_zero() && b.is_zero()) throw DivisionError("gcld of two zero polynomials");
    const SkewRing ring = a.ring();
    Automorphism th = ring.aut();
    auto monic_right = [&](const SkewPoly& p) {
        // normalize d to monic by right-multiplying with theta^{-deg}(lc^{-1})
        if (p.is_monic()) return p;
        if (!p.leading().is_unit())
            throw EuclideanChainError("gcld undefined along Euclidean chain: non-unit leading coefficient " +
                                      p.leading().to_string());
        SElement raw = p.leading().inverse();
        long back = -p.degree();
        SElement c(th.apply_pow(raw.a(), back), th.apply_pow(raw.b(), back));
        return p * SkewPoly::constant(ring, c);
    };
    SkewPoly r0 = a, r1 = b;
    if (r1.is_zero()) return monic_right(r0);
    while (!r1.is_zero()) {
        if (!r1.leading().is_unit())
            throw EuclideanChainError("gcld undefined along Euclidean chain: non-unit leading coefficient " +
                                      r1.leading().to_string());
        DivisionResult d = left_divide(r0, r1);
        SkewPoly r2 = d.remainder;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return monic_right(r0);
}

SkewPoly lclm(const SkewPoly& a, const SkewPoly& b) {
    check_same_ring(a, b);
    if (a.is_zero() || b.is_zero())
        throw DivisionError("lclm requires nonzero arguments");
    ExtendedGcrd e = extended_gcrd(a, b);
    // deg identity: deg lclm + deg gcrd = deg a + deg b
    if (e.lclm.degree() + e.g.degree() != a.degree() + b.degree())
        throw EuclideanChainError("lclm degree identity violated along Euclidean chain");
    return e.lclm;
}

bool is_right_divisor(const SkewPoly& g, const SkewPoly& f) {
    if (g.is_zero()) throw DivisionError("right-divisor test against zero");
    if (!g.leading().is_unit()) {
        if (g.ring().tag == RingTag::S) {
            auto [g1, g2] = crt_split(g);
            auto [f1, f2] = crt_split(f);
            if (g1.is_zero() || g2.is_zero()) {
                // a zero CRT component divides only zero
                return (g1.is_zero() ? f1.is_zero() : is_right_divisor(g1, f1)) &&
                       (g2.is_zero() ? f2.is_zero() : is_right_divisor(g2, f2));
            }
            return is_right_divisor(g1, f1) && is_right_divisor(g2, f2);
        }
        throw DivisionError("right-divisor test with non-unit leading coefficient");
    }
    return right_divide(f, g).remainder.is_zero();
}

std::vector<SkewPoly> enumerate_right_divisors(SkewRing ring, unsigned n, unsigned k,
                                               std::uint64_t budget) {
    if (k > n) return {};
    if (k == 0) return {SkewPoly::one(ring)};
    const unsigned q = ring.field->q();
    if (ring.tag == RingTag::S) {
        // componentwise search joined by CRT pairs
        long double space = 1;
        for (unsigned i = 0; i < 2 * k; ++i) space *= q;
        if (space > static_cast<long double>(budget))
            throw BudgetError("right-divisor enumeration over budget",
                              static_cast<std::uint64_t>(std::min<long double>(space, 1e18L)));
        SkewRing comp = ring.with_tag(RingTag::Fq);
        std::vector<SkewPoly> base = enumerate_right_divisors(comp, n, k, budget);
        std::vector<SkewPoly> out;
        out.reserve(base.size() * base.size());
        for (const SkewPoly& g1 : base)
            for (const SkewPoly& g2 : base) out.push_back(crt_join(g1, g2));
        return out;
    }
    long double space = 1;
    for (unsigned i = 0; i < k; ++i) space *= q;
    if (space > static_cast<long double>(budget))
        throw BudgetError("right-divisor enumeration over budget",
                          static_cast<std::uint64_t>(std::min<long double>(space, 1e18L)));
    SkewPoly target = SkewPoly::x_pow_minus_one(ring, n);
    std::vector<SkewPoly> out;
    std::vector<std::uint16_t> digits(k, 0);
    const FieldSpec& F = *ring.field;
    for (;;) {
        std::vector<SElement> coeffs;
        coeffs.reserve(k + 1);
        for (unsigned i = 0; i < k; ++i)
            coeffs.push_back(SElement::from_field(F.element(digits[i])));
        coeffs.push_back(ring.one());
        SkewPoly cand(ring, std::move(coeffs));
        if (right_divide(target, cand).remainder.is_zero()) out.push_back(std::move(cand));
        // odometer
        unsigned pos = 0;
        while (pos < k) {
            if (++digits[pos] < q) break;
            digits[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    return out;
}

std::pair<SkewPoly, SkewPoly> crt_split(const SkewPoly& p) {
    SkewRing comp = p.ring().with_tag(RingTag::Fq);
    std::vector<SElement> c1, c2;
    c1.reserve(p.coeffs().size());
    c2.reserve(p.coeffs().size());
    for (const SElement& c : p.coeffs()) {
        c1.push_back(SElement::from_field(c.crt1()));
        c2.push_back(SElement::from_field(c.crt2()));
    }
    return {SkewPoly(comp, std::move(c1)), SkewPoly(comp, std::move(c2))};
}

SkewPoly crt_join(const SkewPoly& p1, const SkewPoly& p2) {
    if (p1.ring().field != p2.ring().field || p1.ring().theta_t != p2.ring().theta_t)
        throw SpecMismatchError("CRT join of polynomials from different rings");
    SkewRing ring = p1.ring().with_tag(RingTag::S);
    std::size_t len = std::max(p1.coeffs().size(), p2.coeffs().size());
    std::vector<SElement> c;
    c.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        c.push_back(SElement::from_crt(p1.coeff(i).crt1(), p2.coeff(i).crt1()));
    return SkewPoly(ring, std::move(c));
}

std::string SkewPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int j = degree(); j >= 0; --j) {
        const SElement c = coeff(static_cast<std::size_t>(j));
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs;
        bool needs_star = true;
        if (c == ring_.one() && j > 0) {
            needs_star = false;
        } else if (c.is_field()) {
            cs = c.a().to_string();
        } else {
            cs = "(" + c.to_string() + ")";
        }
        if (j == 0) {
            out += cs.empty() ? std::string("1") : cs;
        } else {
            std::string xs = j == 1 ? "x" : "x^" + std::to_string(j);
            out += needs_star ? cs + "*" + xs : xs;
        }
    }
    return out;
}

} // namespace sgqc
