#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgqc/errors.hpp"

namespace sgqc {

class FieldElement;

/// Immutable description of F_q = F_{p^d} in polynomial basis, with
/// precomputed operation tables and a fixed primitive element used for
/// printing powers of "t".
///
/// Instances live in a process-wide registry and are obtained through
/// FieldSpec::get; elements hold plain pointers to their spec, so specs
/// are never destroyed. All members are immutable after construction and
/// safe to share between threads.
class FieldSpec {
public:
    /// Field with the default modulus for (p, d) (Conway polynomial for
    /// the small fields this library targets). Throws SizeError if no
    /// default is on record.
    static const FieldSpec& get(unsigned p, unsigned d);

    /// Field with an explicit monic irreducible modulus, ascending
    /// coefficients, length d + 1. Irreducibility is checked by trial
    /// division against all monic polynomials of degree <= d/2.
    static const FieldSpec& get(unsigned p, unsigned d, const std::vector<unsigned>& modulus);

    unsigned p() const { return p_; }
    unsigned d() const { return d_; }
    unsigned q() const { return q_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    /// n * 1 in the prime subfield (n may be negative).
    FieldElement from_int(long n) const;
    /// The fixed generator of the multiplicative group, printed as "t".
    FieldElement primitive() const;
    FieldElement element(std::uint16_t idx) const;
    /// Element from polynomial-basis coordinates (ascending, length <= d).
    FieldElement from_coeffs(const std::vector<unsigned>& coeffs) const;
    std::vector<unsigned> coeffs(std::uint16_t idx) const;

    // Index-level arithmetic. Indices encode coordinate vectors base p.
    std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return add_[a * q_ + b]; }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return mul_[a * q_ + b]; }
    std::uint16_t neg(std::uint16_t a) const { return neg_[a]; }
    std::uint16_t inv(std::uint16_t a) const;
    /// a^(p^e), e >= 0.
    std::uint16_t frob(std::uint16_t a, unsigned e) const;
    std::uint16_t pow(std::uint16_t a, long e) const;

    unsigned log(std::uint16_t a) const;       // discrete log base primitive; a != 0
    std::uint16_t antilog(unsigned k) const { return antilog_[k % (q_ - 1)]; }

    /// Paper-style rendering: "0", prime-subfield digits, "t", "t^k".
    std::string render(std::uint16_t idx) const;

    bool operator==(const FieldSpec& other) const { return this == &other; }

private:
    FieldSpec(unsigned p, unsigned d, std::vector<unsigned> modulus);

    unsigned p_, d_, q_;
    std::vector<unsigned> modulus_;
    std::uint16_t prim_;
    std::vector<std::uint16_t> add_, mul_, neg_, inv_;
    std::vector<std::uint16_t> antilog_;
    std::vector<unsigned> log_;
};

/// Value-type element of a FieldSpec. Default-constructed elements are
/// detached and unusable until assigned.
class FieldElement {
public:
    FieldElement() : spec_(nullptr), idx_(0) {}
    FieldElement(const FieldSpec& spec, std::uint16_t idx) : spec_(&spec), idx_(idx) {}

    const FieldSpec& spec() const;
    std::uint16_t index() const { return idx_; }
    bool is_zero() const { return idx_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(long e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    const FieldSpec* spec_;
    std::uint16_t idx_;
};

/// Frobenius-power automorphism theta_t : a -> a^(p^t) of a fixed field.
/// Its order is m_t = d / gcd(d, t).
class Automorphism {
public:
    Automorphism(const FieldSpec& spec, unsigned t);

    const FieldSpec& spec() const { return *spec_; }
    unsigned t() const { return t_; }
    unsigned order() const { return order_; }

    FieldElement operator()(const FieldElement& a) const;
    /// theta^k with k possibly negative (k is reduced mod the order).
    FieldElement apply_pow(const FieldElement& a, long k) const;

    bool operator==(const Automorphism& o) const;

private:
    const FieldSpec* spec_;
    unsigned t_;
    unsigned order_;
};

/// theta_t(a) = a^(p^t); spec-checked.
FieldElement frobenius(const FieldElement& a, const Automorphism& aut);

/// Order of theta_t on F_{p^d}: d / gcd(d, t).
unsigned aut_order(unsigned d, unsigned t);

/// All q elements in index order (lexicographic on ascending coordinate
/// vectors). Refuses fields larger than `bound`.
std::vector<FieldElement> enumerate_field(const FieldSpec& spec, unsigned bound = 512);

} // namespace sgqc
