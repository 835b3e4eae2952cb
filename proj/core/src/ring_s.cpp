#include "sgqc/ring_s.hpp"

namespace sgqc {

SElement SElement::inverse() const {
    FieldElement c1 = crt1(), c2 = crt2();
    if (c1.is_zero() || c2.is_zero()) {
        std::string which = c1.is_zero() ? (c2.is_zero() ? "both CRT components" : "CRT component 1")
                                         : "CRT component 2";
        throw NonUnitError("inverse of a non-unit in S: " + which + " vanish" +
                           (c1.is_zero() && c2.is_zero() ? "" : "es"));
    }
    return from_crt(c1.inverse(), c2.inverse());
}

std::string SElement::to_string() const {
    if (is_field()) return a_.to_string();
    return "(" + a_.to_string() + ")+v*(" + b_.to_string() + ")";
}

std::vector<FieldElement> gray_map(std::span<const SElement> word) {
    std::vector<FieldElement> out;
    out.reserve(word.size() * 2);
    for (const SElement& s : word) out.push_back(s.a());
    for (const SElement& s : word) out.push_back(s.a() + s.b());
    return out;
}

std::vector<SElement> gray_unmap(std::span<const FieldElement> image) {
    if (image.size() % 2 != 0)
        throw SizeError("Gray preimage requires an even-length vector");
    size_t n = image.size() / 2;
    std::vector<SElement> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.emplace_back(image[i], image[n + i] - image[i]);
    return out;
}

unsigned lee_weight(const SElement& s) {
    return (s.a().is_zero() ? 0u : 1u) + ((s.a() + s.b()).is_zero() ? 0u : 1u);
}

unsigned lee_weight(std::span<const SElement> word) {
    unsigned w = 0;
    for (const SElement& s : word) w += lee_weight(s);
    return w;
}

SElement theta_s(const SElement& s, const Automorphism& aut) {
    return SElement(aut(s.a()), aut(s.b()));
}

std::pair<FieldElement, FieldElement> crt_split(const SElement& s) {
    return {s.crt1(), s.crt2()};
}

SElement crt_join(const FieldElement& c1, const FieldElement& c2) {
    return SElement::from_crt(c1, c2);
}

std::pair<std::vector<FieldElement>, std::vector<FieldElement>> crt_split(std::span<const SElement> w) {
    std::vector<FieldElement> c1, c2;
    c1.reserve(w.size());
    c2.reserve(w.size());
    for (const SElement& s : w) {
        c1.push_back(s.crt1());
        c2.push_back(s.crt2());
    }
    return {std::move(c1), std::move(c2)};
}

std::vector<SElement> crt_join(std::span<const FieldElement> c1, std::span<const FieldElement> c2) {
    if (c1.size() != c2.size()) throw SizeError("CRT join requires equal lengths");
    std::vector<SElement> out;
    out.reserve(c1.size());
    for (size_t i = 0; i < c1.size(); ++i) out.push_back(SElement::from_crt(c1[i], c2[i]));
    return out;
}

std::vector<SElement> embed_field_vector(std::span<const FieldElement> w) {
    std::vector<SElement> out;
    out.reserve(w.size());
    for (const FieldElement& a : w) out.push_back(SElement::from_field(a));
    return out;
}

SElement inner_product(std::span<const SElement> x, std::span<const SElement> y) {
    if (x.size() != y.size()) throw SizeError("inner product requires equal lengths");
    if (x.empty()) throw SizeError("inner product of empty vectors");
    SElement acc = SElement::zero(x[0].spec());
    for (size_t i = 0; i < x.size(); ++i) acc = acc + x[i] * y[i];
    return acc;
}

} // namespace sgqc
