#include "sgqc/skew_cyclic.hpp"

#include <map>
#include <numeric>
#include <set>

namespace sgqc {

std::vector<SElement> sigma(std::span<const SElement> word, const Automorphism& aut) {
    if (word.empty()) return {};
    std::vector<SElement> out;
    out.reserve(word.size());
    out.push_back(theta_s(word.back(), aut));
    for (std::size_t i = 0; i + 1 < word.size(); ++i) out.push_back(theta_s(word[i], aut));
    return out;
}

namespace {

std::vector<SElement> poly_to_vector(const SkewPoly& p, unsigned n) {
    std::vector<SElement> v(n, p.ring().zero());
    for (unsigned i = 0; i < n; ++i) v[i] = p.coeff(i);
    return v;
}

} // namespace

std::vector<std::vector<SElement>> SkewCyclicCode::rows(unsigned depth) const {
    std::vector<std::vector<SElement>> out;
    out.reserve(depth);
    if (depth == 0) return out;
    Automorphism th = ring.aut();
    std::vector<SElement> w = poly_to_vector(gen.reduce_mod_xn_minus_1(n), n);
    out.push_back(w);
    for (unsigned j = 1; j < depth; ++j) {
        w = sigma(w, th);
        out.push_back(w);
    }
    return out;
}

unsigned SkewCyclicCode::natural_depth() const {
    if (gen.is_zero()) return 0;
    int d = gen.reduce_mod_xn_minus_1(n).degree();
    if (d < 0) return 0;
    return n - static_cast<unsigned>(d);
}

LinearCodeFq SkewCyclicCode::module_span() const {
    const FieldSpec& F = *ring.field;
    unsigned period = static_cast<unsigned>(std::lcm<std::uint64_t>(ring.aut_order(), n));
    RrefBasis basis(F, 2 * n);
    SElement vv = SElement::v(F);
    for (const auto& row : rows(period)) {
        basis.insert(gray_map(row));
        if (ring.tag == RingTag::S) {
            std::vector<SElement> vrow;
            vrow.reserve(row.size());
            for (const SElement& e : row) vrow.push_back(vv * e);
            basis.insert(gray_map(vrow));
        }
    }
    return LinearCodeFq::from_basis(basis);
}

SkewCyclicCode build_skew_cyclic(unsigned n, const SkewPoly& g) {
    if (n == 0) throw SizeError("code length must be positive");
    SkewRing ring = g.ring();
    SkewPoly target = SkewPoly::x_pow_minus_one(ring, n);
    if (g.is_zero())
        return SkewCyclicCode(ring, n, target); // zero code, generator x^n - 1
    SkewPoly gr = g.reduce_mod_xn_minus_1(n);
    if (gr.is_zero()) return SkewCyclicCode(ring, n, target);
    if (gr.leading().is_unit()) {
        DivisionResult d = right_divide(target, gr);
        if (!d.remainder.is_zero())
            throw DivisorError("generator does not right-divide x^" + std::to_string(n) +
                               " - 1; remainder " + d.remainder.to_string());
    } else if (ring.tag == RingTag::S) {
        if (!is_right_divisor(gr, target))
            throw DivisorError("generator does not right-divide x^" + std::to_string(n) +
                               " - 1 (CRT-componentwise check)");
    } else {
        throw DivisionError("generator with non-unit leading coefficient over F_q");
    }
    return SkewCyclicCode(ring, n, gr);
}

SkewCyclicCode combine_crt_codes(const SkewCyclicCode& c1, const SkewCyclicCode& c2) {
    if (c1.n != c2.n) throw SizeError("CRT combination requires equal lengths");
    if (c1.ring.field != c2.ring.field || c1.ring.theta_t != c2.ring.theta_t)
        throw SpecMismatchError("CRT combination requires the same field and automorphism");
    if (c1.ring.tag != RingTag::Fq || c2.ring.tag != RingTag::Fq)
        throw SpecMismatchError("CRT combination takes component codes over F_q");
    // Zero codes carry x^n - 1 itself as generator, so the join is always
    // a right divisor of x^n - 1.
    SkewPoly joined = crt_join(c1.gen, c2.gen);
    SkewRing sring = c1.ring.with_tag(RingTag::S);
    if (!is_right_divisor(joined, SkewPoly::x_pow_minus_one(sring, c1.n)))
        throw DivisorError("CRT join is not a right divisor of x^n - 1");
    return SkewCyclicCode(sring, c1.n, joined);
}

std::vector<unsigned> Factorization::exponents() const {
    std::vector<unsigned> out;
    out.reserve(factors.size());
    for (const auto& [f, s] : factors) out.push_back(s);
    return out;
}

Factorization factor_xn_minus_1(unsigned n, SkewRing ring) {
    SkewRing R = ring.with_tag(RingTag::Fq);
    const FieldSpec& F = *R.field;
    const unsigned q = F.q();
    SkewPoly rest = SkewPoly::x_pow_minus_one(R, n);
    Factorization out;
    while (rest.degree() > 0) {
        // minimal-degree monic right factor of rest; irreducible by
        // minimality (a proper right factor of it would also right-divide
        // rest with smaller degree)
        SkewPoly p = SkewPoly::zero(R);
        for (unsigned deg = 1; p.is_zero() && deg < static_cast<unsigned>(rest.degree()); ++deg) {
            std::vector<std::uint16_t> digits(deg, 0);
            for (;;) {
                std::vector<SElement> c;
                c.reserve(deg + 1);
                for (unsigned i = 0; i < deg; ++i)
                    c.push_back(SElement::from_field(F.element(digits[i])));
                c.push_back(R.one());
                SkewPoly cand(R, std::move(c));
                if (right_divide(rest, cand).remainder.is_zero()) {
                    p = std::move(cand);
                    break;
                }
                unsigned pos = 0;
                while (pos < deg) {
                    if (++digits[pos] < q) break;
                    digits[pos] = 0;
                    ++pos;
                }
                if (pos == deg) break;
            }
        }
        if (p.is_zero()) p = rest; // rest itself is irreducible
        unsigned mult = 0;
        for (;;) {
            DivisionResult d = right_divide(rest, p);
            if (!d.remainder.is_zero()) break;
            rest = d.quotient;
            ++mult;
        }
        bool grouped = false;
        for (auto& [f, s] : out.factors) {
            if (f == p) {
                s += mult;
                grouped = true;
                break;
            }
        }
        if (!grouped) out.factors.emplace_back(std::move(p), mult);
    }
    return out;
}

std::uint64_t count_skew_cyclic(unsigned n, SkewRing ring) {
    unsigned m_t = ring.aut_order();
    if (std::gcd(n, m_t) != 1)
        throw HypothesisError("counting formula requires gcd(n, m_t) = 1; got gcd(" +
                              std::to_string(n) + ", " + std::to_string(m_t) + ") != 1");
    if (std::gcd(n, ring.field->q()) != 1)
        throw HypothesisError("counting formula requires gcd(n, q) = 1; got gcd(" +
                              std::to_string(n) + ", " + std::to_string(ring.field->q()) + ") != 1");
    Factorization f = factor_xn_minus_1(n, ring);
    std::uint64_t total = 1;
    for (unsigned s : f.exponents()) {
        std::uint64_t term = s + 1;
        total *= ring.tag == RingTag::S ? term * term : term;
    }
    return total;
}

namespace {

std::vector<SkewPoly> all_monic_right_divisors(SkewRing ring, unsigned n, std::uint64_t budget) {
    std::vector<SkewPoly> out;
    for (unsigned k = 0; k <= n; ++k) {
        auto part = enumerate_right_divisors(ring, n, k, budget);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::string span_key(const LinearCodeFq& code) {
    std::string key;
    for (const auto& row : code.basis) {
        for (const auto& e : row) {
            key.push_back(static_cast<char>('0' + (e.index() & 0x1f)));
            key.push_back(static_cast<char>('a' + ((e.index() >> 5) & 0x1f)));
        }
        key.push_back('|');
    }
    return key;
}

} // namespace

std::uint64_t count_skew_cyclic_oracle(unsigned n, SkewRing ring, std::uint64_t budget) {
    std::set<std::string> spaces;
    if (ring.tag == RingTag::Fq) {
        for (const SkewPoly& g : all_monic_right_divisors(ring, n, budget)) {
            SkewCyclicCode c(ring, n, g);
            spaces.insert(span_key(c.module_span()));
        }
        return spaces.size();
    }
    // over S: CRT pairs of component divisors of arbitrary degrees
    SkewRing comp = ring.with_tag(RingTag::Fq);
    std::vector<SkewPoly> divisors = all_monic_right_divisors(comp, n, budget);
    // a zero CRT component corresponds to the component zero code, whose
    // divisor-form generator is x^n - 1 (already in the list)
    for (const SkewPoly& g1 : divisors) {
        for (const SkewPoly& g2 : divisors) {
            SkewCyclicCode c(ring, n, crt_join(g1, g2));
            spaces.insert(span_key(c.module_span()));
        }
    }
    return spaces.size();
}

bool is_idempotent(const SkewPoly& p, unsigned n) {
    SkewPoly sq = (p * p).reduce_mod_xn_minus_1(n);
    return sq == p.reduce_mod_xn_minus_1(n);
}

namespace {

// Search the F_q-code {u(x) * g} for an idempotent generating the same
// module span. Used when the Euclidean-identity construction fails.
std::optional<SkewPoly> idempotent_by_search(const SkewCyclicCode& code, std::uint64_t budget) {
    const FieldSpec& F = *code.ring.field;
    unsigned k = code.natural_depth();
    long double total = 1;
    for (unsigned i = 0; i < k; ++i) total *= F.q();
    if (total > static_cast<long double>(budget))
        throw BudgetError("idempotent search over budget",
                          static_cast<std::uint64_t>(std::min<long double>(total, 1e18L)));
    auto rows = code.rows(k);
    std::string target = span_key(code.module_span());
    std::vector<std::uint16_t> digits(k, 0);
    if (k == 0) return SkewPoly::zero(code.ring);
    for (;;) {
        std::vector<SElement> w(code.n, code.ring.zero());
        for (unsigned i = 0; i < k; ++i) {
            if (digits[i] == 0) continue;
            SElement c = SElement::from_field(F.element(digits[i]));
            for (unsigned j = 0; j < code.n; ++j) w[j] = w[j] + c * rows[i][j];
        }
        SkewPoly p(code.ring, w);
        if (is_idempotent(p, code.n)) {
            SkewCyclicCode cand(code.ring, code.n, p);
            if (span_key(cand.module_span()) == target) return p;
        }
        unsigned pos = 0;
        while (pos < k) {
            if (++digits[pos] < F.q()) break;
            digits[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    return std::nullopt;
}

SkewPoly idempotent_over_fq(const SkewCyclicCode& code, std::uint64_t budget) {
    const SkewRing ring = code.ring;
    SkewPoly g = code.gen.reduce_mod_xn_minus_1(code.n);
    if (g.is_zero()) return SkewPoly::zero(ring);           // zero code
    g = g.monic();
    if (g.degree() == 0) return SkewPoly::one(ring);        // full space
    SkewPoly target = SkewPoly::x_pow_minus_one(ring, code.n);
    SkewPoly h = right_divide(target, g).quotient;          // x^n - 1 = h * g
    try {
        ExtendedGcrd e = extended_gcrd(g, h);
        if (e.g.degree() == 0) {
            // u*g + w*h = 1; the idempotent of <g> is u*g = 1 - w*h
            SkewPoly cand = (e.u * g).reduce_mod_xn_minus_1(code.n);
            if (is_idempotent(cand, code.n)) {
                SkewCyclicCode cc(ring, code.n, cand);
                if (span_key(cc.module_span()) == span_key(code.module_span())) return cand;
            }
        }
    } catch (const EuclideanChainError&) {
        // fall through to the bounded search
    }
    auto found = idempotent_by_search(code, budget);
    if (!found)
        throw IdempotentError("no idempotent generator found within the search space");
    return *found;
}

} // namespace

SkewPoly make_idempotent_generator(const SkewCyclicCode& code, std::uint64_t budget) {
    unsigned m_t = code.ring.aut_order();
    if (std::gcd(code.n, m_t) != 1)
        throw HypothesisError("idempotent generator requires gcd(n, m_t) = 1");
    if (std::gcd(code.n, code.ring.field->q()) != 1)
        throw HypothesisError("idempotent generator requires gcd(n, q) = 1");
    if (code.ring.tag == RingTag::Fq) return idempotent_over_fq(code, budget);
    // over S: componentwise idempotents joined as (1-v)e1 + v e2
    auto [g1, g2] = crt_split(code.gen);
    SkewRing comp = code.ring.with_tag(RingTag::Fq);
    SkewPoly e1 = idempotent_over_fq(SkewCyclicCode(comp, code.n, g1), budget);
    SkewPoly e2 = idempotent_over_fq(SkewCyclicCode(comp, code.n, g2), budget);
    SkewPoly e = crt_join(e1, e2).reduce_mod_xn_minus_1(code.n);
    if (!is_idempotent(e, code.n))
        throw IdempotentError("joined idempotent fails the idempotency check");
    SkewCyclicCode cand(code.ring, code.n, e);
    if (span_key(cand.module_span()) != span_key(code.module_span()))
        throw IdempotentError("joined idempotent generates a different module");
    return e;
}

} // namespace sgqc
