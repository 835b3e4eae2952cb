#pragma once

#include <cstdint>
#include <vector>

#include "sgqc/linalg.hpp"
#include "sgqc/skew_poly.hpp"

namespace sgqc {

/// Skew cyclic shift sigma(c) = (theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2})).
std::vector<SElement> sigma(std::span<const SElement> word, const Automorphism& aut);

/// Skew cyclic code of length n generated by a right divisor of x^n - 1.
/// For a monic generator over F_q the dimension is n - deg g and the
/// generator matrix rows are x^j * g for j = 0..k-1.
struct SkewCyclicCode {
    SkewRing ring;
    unsigned n = 0;
    SkewPoly gen;

    SkewCyclicCode(SkewRing r, unsigned len, SkewPoly g) : ring(r), n(len), gen(std::move(g)) {}

    /// x^j * gen mod (x^n - 1) as coefficient vectors, depth rows.
    std::vector<std::vector<SElement>> rows(unsigned depth) const;
    /// Natural generator-matrix depth: n - deg gen (0 for the zero code).
    unsigned natural_depth() const;
    /// Full left-module span of the code as an F_q row space of Gray
    /// images (shifts and v-multiples over S).
    LinearCodeFq module_span() const;
};

/// Builds the code after checking that g is monic (or a CRT join of
/// monic components) and right-divides x^n - 1; a nonzero remainder is
/// carried in the DivisorError message.
SkewCyclicCode build_skew_cyclic(unsigned n, const SkewPoly& g);

/// (1-v)C1 + vC2 with generator (1-v)a1(x) + v a2(x).
SkewCyclicCode combine_crt_codes(const SkewCyclicCode& c1, const SkewCyclicCode& c2);

/// Factorization of x^n - 1 into monic irreducibles of F_q[x; theta_t]
/// by greedy minimal-degree right-factor extraction (a minimal-degree
/// right factor is automatically irreducible). Identical factors are
/// grouped with multiplicities. With the identity automorphism this is
/// the commutative factorization; with a nontrivial twist the two can
/// genuinely differ, and the right-divisor counts follow the skew one.
struct Factorization {
    std::vector<std::pair<SkewPoly, unsigned>> factors;
    std::vector<unsigned> exponents() const;
};
Factorization factor_xn_minus_1(unsigned n, SkewRing ring);

/// Number of skew cyclic codes of length n: prod (s_j + 1) over F_q and
/// prod (s_j + 1)^2 over S. Requires gcd(n, m_t) = 1 and gcd(n, q) = 1;
/// otherwise refuses with HypothesisError (the formula is not asserted
/// outside its hypotheses).
std::uint64_t count_skew_cyclic(unsigned n, SkewRing ring);

/// Exhaustive count of distinct left submodules generated by monic right
/// divisors of x^n - 1 (pairs of component divisors over S), deduplicated
/// by module row space.
std::uint64_t count_skew_cyclic_oracle(unsigned n, SkewRing ring, std::uint64_t budget = 10000000ull);

/// True iff p * p = p modulo x^n - 1 under skew multiplication.
bool is_idempotent(const SkewPoly& p, unsigned n);

/// Idempotent generator e with <e> = <gen> and e*e = e mod x^n - 1.
/// Requires gcd(n, m_t) = 1 and gcd(n, q) = 1. The Euclidean-identity
/// construction is verified and falls back to a bounded search over the
/// code; failure raises IdempotentError rather than returning a
/// non-idempotent.
SkewPoly make_idempotent_generator(const SkewCyclicCode& code, std::uint64_t budget = 1000000ull);

} // namespace sgqc
