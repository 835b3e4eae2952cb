#include "sgqc/finite_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace sgqc {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

// Dense polynomial arithmetic over F_p used only during construction.
using PPoly = std::vector<unsigned>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    ptrim(r);
    return r;
}

// Remainder of a by monic b.
PPoly pmod(PPoly a, const PPoly& b, unsigned p) {
    ptrim(a);
    while (a.size() >= b.size() && !a.empty()) {
        unsigned c = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            unsigned sub = (c * b[i]) % p;
            a[i + shift] = (a[i + shift] + p - sub) % p;
        }
        ptrim(a);
    }
    return a;
}

bool irreducible(const PPoly& m, unsigned p) {
    unsigned d = static_cast<unsigned>(m.size()) - 1;
    if (d == 1) return true;
    // Trial division by every monic polynomial of degree 1..d/2.
    for (unsigned deg = 1; deg <= d / 2; ++deg) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            PPoly div(deg + 1, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < deg; ++i) {
                div[i] = static_cast<unsigned>(c % p);
                c /= p;
            }
            div[deg] = 1;
            if (pmod(m, div, p).empty()) return false;
        }
    }
    return true;
}

const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>>& default_moduli() {
    // Conway polynomials, ascending coefficients.
    static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> table = {
        {{2, 1}, {1, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{3, 1}, {1, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{5, 1}, {3, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{7, 1}, {4, 1}},
        {{7, 2}, {3, 6, 1}},
    };
    return table;
}

struct Registry {
    std::mutex mu;
    std::map<std::tuple<unsigned, unsigned, std::vector<unsigned>>, std::unique_ptr<FieldSpec>> specs;
};

Registry& registry() {
    static Registry* r = new Registry;
    return *r;
}

} // namespace

FieldSpec::FieldSpec(unsigned p, unsigned d, std::vector<unsigned> modulus)
    : p_(p), d_(d), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw SizeError("characteristic " + std::to_string(p_) + " is not prime");
    if (d_ < 1) throw SizeError("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < d_; ++i) {
        q *= p_;
        if (q > 512) throw SizeError("field size p^d exceeds the supported bound 512");
    }
    q_ = static_cast<unsigned>(q);
    if (modulus_.size() != d_ + 1)
        throw SizeError("modulus must have degree d (length d + 1 ascending)");
    for (unsigned c : modulus_)
        if (c >= p_) throw SizeError("modulus coefficient out of range [0, p)");
    if (modulus_.back() != 1) throw SizeError("modulus must be monic");
    if (!irreducible(modulus_, p_))
        throw SizeError("modulus is reducible over F_" + std::to_string(p_));

    auto decode = [&](std::uint16_t idx) {
        PPoly c(d_, 0);
        for (unsigned i = 0; i < d_; ++i) {
            c[i] = idx % p_;
            idx = static_cast<std::uint16_t>(idx / p_);
        }
        return c;
    };
    auto encode = [&](const PPoly& c) {
        unsigned idx = 0;
        for (unsigned i = d_; i-- > 0;) idx = idx * p_ + (i < c.size() ? c[i] : 0);
        return static_cast<std::uint16_t>(idx);
    };

    add_.resize(std::size_t(q_) * q_);
    mul_.resize(std::size_t(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
        PPoly ca = decode(static_cast<std::uint16_t>(a));
        PPoly na(d_, 0);
        for (unsigned i = 0; i < d_; ++i) na[i] = (p_ - ca[i]) % p_;
        neg_[a] = encode(na);
        for (unsigned b = 0; b < q_; ++b) {
            PPoly cb = decode(static_cast<std::uint16_t>(b));
            PPoly s(d_, 0);
            for (unsigned i = 0; i < d_; ++i) s[i] = (ca[i] + cb[i]) % p_;
            add_[std::size_t(a) * q_ + b] = encode(s);
            mul_[std::size_t(a) * q_ + b] = encode(pmod(pmul(ca, cb, p_), modulus_, p_));
        }
    }
    for (unsigned a = 1; a < q_; ++a)
        for (unsigned b = 1; b < q_; ++b)
            if (mul_[std::size_t(a) * q_ + b] == 1) { inv_[a] = static_cast<std::uint16_t>(b); break; }

    // Pick the primitive element: prefer the basis element x for d >= 2,
    // otherwise the smallest generator.
    auto order_of = [&](std::uint16_t a) {
        unsigned ord = 1;
        std::uint16_t v = a;
        while (v != 1) {
            v = mul_[std::size_t(v) * q_ + a];
            ++ord;
            if (ord > q_) return 0u; // zero or defect; cannot happen for units
        }
        return ord;
    };
    prim_ = 0;
    if (d_ >= 2 && order_of(static_cast<std::uint16_t>(p_)) == q_ - 1) {
        prim_ = static_cast<std::uint16_t>(p_);
    } else {
        for (unsigned a = 1; a < q_; ++a)
            if (order_of(static_cast<std::uint16_t>(a)) == q_ - 1) { prim_ = static_cast<std::uint16_t>(a); break; }
    }
    if (prim_ == 0 && q_ == 2) prim_ = 1;
    if (prim_ == 0) throw SizeError("no primitive element found (internal defect)");

    antilog_.resize(q_ - 1);
    log_.assign(q_, 0);
    std::uint16_t v = 1;
    for (unsigned k = 0; k < q_ - 1; ++k) {
        antilog_[k] = v;
        log_[v] = k;
        v = mul_[std::size_t(v) * q_ + prim_];
    }
}

const FieldSpec& FieldSpec::get(unsigned p, unsigned d) {
    auto it = default_moduli().find({p, d});
    if (it == default_moduli().end())
        throw SizeError("no default modulus on record for p=" + std::to_string(p) +
                        ", d=" + std::to_string(d) + "; supply one explicitly");
    return get(p, d, it->second);
}

const FieldSpec& FieldSpec::get(unsigned p, unsigned d, const std::vector<unsigned>& modulus) {
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    auto key = std::make_tuple(p, d, modulus);
    auto it = r.specs.find(key);
    if (it == r.specs.end())
        it = r.specs.emplace(key, std::unique_ptr<FieldSpec>(new FieldSpec(p, d, modulus))).first;
    return *it->second;
}

FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }

FieldElement FieldSpec::from_int(long n) const {
    long m = n % static_cast<long>(p_);
    if (m < 0) m += p_;
    return FieldElement(*this, static_cast<std::uint16_t>(m));
}

FieldElement FieldSpec::primitive() const { return FieldElement(*this, prim_); }

FieldElement FieldSpec::element(std::uint16_t idx) const {
    if (idx >= q_) throw SizeError("element index out of range");
    return FieldElement(*this, idx);
}

FieldElement FieldSpec::from_coeffs(const std::vector<unsigned>& coeffs) const {
    if (coeffs.size() > d_) throw SizeError("coordinate vector longer than d");
    unsigned idx = 0;
    for (unsigned i = d_; i-- > 0;) {
        unsigned c = i < coeffs.size() ? coeffs[i] : 0;
        if (c >= p_) throw SizeError("coordinate out of range [0, p)");
        idx = idx * p_ + c;
    }
    return FieldElement(*this, static_cast<std::uint16_t>(idx));
}

std::vector<unsigned> FieldSpec::coeffs(std::uint16_t idx) const {
    std::vector<unsigned> c(d_, 0);
    for (unsigned i = 0; i < d_; ++i) {
        c[i] = idx % p_;
        idx = static_cast<std::uint16_t>(idx / p_);
    }
    return c;
}

std::uint16_t FieldSpec::inv(std::uint16_t a) const {
    if (a == 0) throw NonUnitError("inverse of zero in F_" + std::to_string(q_));
    return inv_[a];
}

std::uint16_t FieldSpec::frob(std::uint16_t a, unsigned e) const {
    if (a == 0 || q_ == 2) return a;
    // a^(p^e) = antilog(log(a) * p^e mod (q-1))
    std::uint64_t exp = 1;
    for (unsigned i = 0; i < e; ++i) exp = (exp * p_) % (q_ - 1);
    return antilog_[static_cast<unsigned>((static_cast<std::uint64_t>(log_[a]) * exp) % (q_ - 1))];
}

std::uint16_t FieldSpec::pow(std::uint16_t a, long e) const {
    if (a == 0) {
        if (e < 0) throw NonUnitError("negative power of zero");
        return e == 0 ? 1 : 0;
    }
    long m = e % static_cast<long>(q_ - 1);
    if (m < 0) m += q_ - 1;
    return antilog_[static_cast<unsigned>((static_cast<std::uint64_t>(log_[a]) * m) % (q_ - 1))];
}

unsigned FieldSpec::log(std::uint16_t a) const {
    if (a == 0) throw NonUnitError("discrete log of zero");
    return log_[a];
}

std::string FieldSpec::render(std::uint16_t idx) const {
    if (idx == 0) return "0";
    if (idx < p_) return std::to_string(idx); // prime subfield
    unsigned k = log_[idx];
    if (k == 1) return "t";
    return "t^" + std::to_string(k);
}

const FieldSpec& FieldElement::spec() const {
    if (!spec_) throw SpecMismatchError("use of a detached field element");
    return *spec_;
}

namespace {
const FieldSpec& common(const FieldElement& a, const FieldElement& b) {
    if (&a.spec() != &b.spec())
        throw SpecMismatchError("field elements from different field specs");
    return a.spec();
}
} // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    const FieldSpec& s = common(*this, o);
    return FieldElement(s, s.add(idx_, o.idx_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    const FieldSpec& s = common(*this, o);
    return FieldElement(s, s.add(idx_, s.neg(o.idx_)));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    const FieldSpec& s = common(*this, o);
    return FieldElement(s, s.mul(idx_, o.idx_));
}

FieldElement FieldElement::operator-() const {
    const FieldSpec& s = spec();
    return FieldElement(s, s.neg(idx_));
}

FieldElement FieldElement::inverse() const {
    const FieldSpec& s = spec();
    return FieldElement(s, s.inv(idx_));
}

FieldElement FieldElement::pow(long e) const {
    const FieldSpec& s = spec();
    return FieldElement(s, s.pow(idx_, e));
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (spec_ == nullptr && o.spec_ == nullptr) return true;
    return spec_ == o.spec_ && idx_ == o.idx_;
}

std::string FieldElement::to_string() const { return spec().render(idx_); }

Automorphism::Automorphism(const FieldSpec& spec, unsigned t)
    : spec_(&spec), t_(t), order_(aut_order(spec.d(), t)) {}

FieldElement Automorphism::operator()(const FieldElement& a) const {
    if (&a.spec() != spec_)
        throw SpecMismatchError("automorphism applied to an element of a different field");
    return FieldElement(*spec_, spec_->frob(a.index(), t_));
}

FieldElement Automorphism::apply_pow(const FieldElement& a, long k) const {
    if (&a.spec() != spec_)
        throw SpecMismatchError("automorphism applied to an element of a different field");
    long m = k % static_cast<long>(order_);
    if (m < 0) m += order_;
    return FieldElement(*spec_, spec_->frob(a.index(), t_ * static_cast<unsigned>(m)));
}

bool Automorphism::operator==(const Automorphism& o) const {
    return spec_ == o.spec_ && t_ == o.t_;
}

FieldElement frobenius(const FieldElement& a, const Automorphism& aut) { return aut(a); }

unsigned aut_order(unsigned d, unsigned t) {
    if (d < 1 || t < 1) throw SizeError("aut_order requires d >= 1 and t >= 1");
    return d / std::gcd(d, t);
}

std::vector<FieldElement> enumerate_field(const FieldSpec& spec, unsigned bound) {
    if (spec.q() > bound)
        throw SizeError("field of size " + std::to_string(spec.q()) +
                        " exceeds the enumeration bound " + std::to_string(bound));
    std::vector<FieldElement> out;
    out.reserve(spec.q());
    for (unsigned i = 0; i < spec.q(); ++i) out.push_back(spec.element(static_cast<std::uint16_t>(i)));
    return out;
}

} // namespace sgqc
