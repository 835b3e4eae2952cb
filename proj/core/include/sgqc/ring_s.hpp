#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sgqc/finite_field.hpp"

namespace sgqc {

/// Element a + v*b of S = F_q + vF_q with v^2 = v. The CRT view is
/// (c1, c2) = (a, a + b); multiplication is componentwise there, so an
/// element is a unit iff both CRT components are nonzero. Arithmetic on
/// zero divisors is total; only inversion is partial.
class SElement {
public:
    SElement() = default;
    SElement(FieldElement a, FieldElement b) : a_(a), b_(b) {}

    static SElement from_field(const FieldElement& a) { return SElement(a, a.spec().zero()); }
    static SElement zero(const FieldSpec& s) { return SElement(s.zero(), s.zero()); }
    static SElement one(const FieldSpec& s) { return SElement(s.one(), s.zero()); }
    /// v itself: a = 0, b = 1.
    static SElement v(const FieldSpec& s) { return SElement(s.zero(), s.one()); }
    static SElement one_minus_v(const FieldSpec& s) { return SElement(s.one(), -s.one()); }
    static SElement from_crt(const FieldElement& c1, const FieldElement& c2) {
        return SElement(c1, c2 - c1);
    }

    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    FieldElement crt1() const { return a_; }
    FieldElement crt2() const { return a_ + b_; }

    const FieldSpec& spec() const { return a_.spec(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    /// True iff the element has no v-part (lies in the subring F_q).
    bool is_field() const { return b_.is_zero(); }
    bool is_unit() const { return !crt1().is_zero() && !crt2().is_zero(); }

    SElement operator+(const SElement& o) const { return {a_ + o.a_, b_ + o.b_}; }
    SElement operator-(const SElement& o) const { return {a_ - o.a_, b_ - o.b_}; }
    SElement operator-() const { return {-a_, -b_}; }
    /// (a+vb)(a'+vb') = aa' + v(ab' + a'b + bb').
    SElement operator*(const SElement& o) const {
        return {a_ * o.a_, a_ * o.b_ + o.a_ * b_ + b_ * o.b_};
    }
    SElement inverse() const;

    bool operator==(const SElement& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const SElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldElement a_, b_;
};

inline SElement s_add(const SElement& x, const SElement& y) { return x + y; }
inline SElement s_mul(const SElement& x, const SElement& y) { return x * y; }
inline SElement s_neg(const SElement& x) { return -x; }
inline SElement s_inv(const SElement& x) { return x.inverse(); }

/// phi(a+vb) = (a, a+b) extended to vectors: the image of (s_1..s_n) is
/// (a_1..a_n, a_1+b_1..a_n+b_n), an F_q-linear bijection S^n -> F_q^{2n}.
std::vector<FieldElement> gray_map(std::span<const SElement> word);
std::vector<SElement> gray_unmap(std::span<const FieldElement> image);

/// Lee weight = Hamming weight of the Gray image.
unsigned lee_weight(const SElement& s);
unsigned lee_weight(std::span<const SElement> word);

/// theta_t on S: frobenius on both coordinates; fixes v.
SElement theta_s(const SElement& s, const Automorphism& aut);

std::pair<FieldElement, FieldElement> crt_split(const SElement& s);
SElement crt_join(const FieldElement& c1, const FieldElement& c2);
std::pair<std::vector<FieldElement>, std::vector<FieldElement>> crt_split(std::span<const SElement> w);
std::vector<SElement> crt_join(std::span<const FieldElement> c1, std::span<const FieldElement> c2);

std::vector<SElement> embed_field_vector(std::span<const FieldElement> w);

/// Componentwise Euclidean product over S.
SElement inner_product(std::span<const SElement> x, std::span<const SElement> y);

} // namespace sgqc
