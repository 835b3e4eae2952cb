#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgqc/ring_s.hpp"

namespace sgqc {

enum class RingTag { Fq, S };

/// Coefficient-ring context of a skew polynomial ring R[x; theta_t] with
/// R = F_q (tag Fq) or R = F_q + vF_q (tag S). Cheap value type; two
/// contexts compare equal iff they share the field spec, the Frobenius
/// exponent and the coefficient ring.
struct SkewRing {
    const FieldSpec* field = nullptr;
    unsigned theta_t = 1;
    RingTag tag = RingTag::Fq;

    static SkewRing fq(const FieldSpec& f, unsigned t) { return {&f, t, RingTag::Fq}; }
    static SkewRing s(const FieldSpec& f, unsigned t) { return {&f, t, RingTag::S}; }

    Automorphism aut() const { return Automorphism(*field, theta_t); }
    unsigned aut_order() const { return sgqc::aut_order(field->d(), theta_t); }
    SkewRing with_tag(RingTag t) const { return {field, theta_t, t}; }

    SElement zero() const { return SElement::zero(*field); }
    SElement one() const { return SElement::one(*field); }

    bool operator==(const SkewRing& o) const {
        return field == o.field && theta_t == o.theta_t && tag == o.tag;
    }
    bool operator!=(const SkewRing& o) const { return !(*this == o); }
};

/// Polynomial in R[x; theta_t] with the twisted product
/// (a x^i)(b x^j) = a theta^i(b) x^{i+j}. Coefficients are stored
/// ascending with the top coefficient nonzero (the zero polynomial is the
/// empty list and has degree -1, treated as smaller than any degree).
class SkewPoly {
public:
    explicit SkewPoly(SkewRing ring) : ring_(ring) {}
    SkewPoly(SkewRing ring, std::vector<SElement> coeffs);

    static SkewPoly zero(SkewRing ring) { return SkewPoly(ring); }
    static SkewPoly one(SkewRing ring);
    static SkewPoly constant(SkewRing ring, const SElement& c);
    static SkewPoly x_pow(SkewRing ring, unsigned k);
    /// x^n - 1.
    static SkewPoly x_pow_minus_one(SkewRing ring, unsigned n);
    static SkewPoly from_field_coeffs(SkewRing ring, const std::vector<FieldElement>& coeffs);

    const SkewRing& ring() const { return ring_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;
    SElement coeff(std::size_t i) const;
    const SElement& leading() const;
    const std::vector<SElement>& coeffs() const { return coeffs_; }

    SkewPoly operator+(const SkewPoly& o) const;
    SkewPoly operator-(const SkewPoly& o) const;
    SkewPoly operator-() const;
    /// The twisted (noncommutative) product.
    SkewPoly operator*(const SkewPoly& o) const;
    bool operator==(const SkewPoly& o) const;
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    /// c * p with c a scalar (left multiplication).
    SkewPoly scale_left(const SElement& c) const;
    /// Fold x^{j+n} onto x^j; reduction modulo the left ideal <x^n - 1>.
    SkewPoly reduce_mod_xn_minus_1(unsigned n) const;
    /// lc^{-1} * p; requires a unit leading coefficient.
    SkewPoly monic() const;

    std::string to_string() const;

private:
    SkewRing ring_;
    std::vector<SElement> coeffs_;
    void trim();
};

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);

struct DivisionResult {
    SkewPoly quotient;
    SkewPoly remainder;
    enum class Side { Right, Left } side;
};

/// a = q*b + r with r = 0 or deg r < deg b; requires a unit leading
/// coefficient on b. The reconstruction q*b + r == a is re-checked before
/// returning.
DivisionResult right_divide(const SkewPoly& a, const SkewPoly& b);
/// a = b*q + r likewise (uses theta^{-1}).
DivisionResult left_divide(const SkewPoly& a, const SkewPoly& b);

/// Monic greatest common right divisor via the right Euclidean algorithm.
/// Over S, a non-unit leading coefficient along the chain raises
/// EuclideanChainError; callers may fall back to CRT components.
SkewPoly gcrd(const SkewPoly& a, const SkewPoly& b);
SkewPoly gcld(const SkewPoly& a, const SkewPoly& b);

struct ExtendedGcrd {
    SkewPoly g;          // monic gcrd
    SkewPoly u, w;       // u*a + w*b = g
    SkewPoly lclm;       // monic least common left multiple
};
ExtendedGcrd extended_gcrd(const SkewPoly& a, const SkewPoly& b);

/// Monic least common left multiple; deg lclm = deg a + deg b - deg gcrd.
SkewPoly lclm(const SkewPoly& a, const SkewPoly& b);

/// True iff right_divide(f, g) leaves no remainder. Over S with a
/// non-unit leading coefficient on g the test runs CRT-componentwise.
bool is_right_divisor(const SkewPoly& g, const SkewPoly& f);

/// All monic degree-k right divisors of x^n - 1; over S the search runs
/// componentwise via CRT and joins pairs. Refuses when the search space
/// exceeds `budget` candidates.
std::vector<SkewPoly> enumerate_right_divisors(SkewRing ring, unsigned n, unsigned k,
                                               std::uint64_t budget = 10000000ull);

std::pair<SkewPoly, SkewPoly> crt_split(const SkewPoly& p);
SkewPoly crt_join(const SkewPoly& p1, const SkewPoly& p2);

} // namespace sgqc
