#include "sgqc/analysis.hpp"

#include <chrono>
#include <cmath>

namespace sgqc {

std::string ParamReport::params_string() const {
    std::string ds = d ? std::to_string(*d) : "?";
    return "[" + std::to_string(n) + "," + std::to_string(k) + "," + ds + "]";
}

std::string ParamReport::to_text() const {
    std::string out = params_string() + " (" + convention + ")";
    if (enumerated > 0) out += ", " + std::to_string(enumerated) + " codewords enumerated";
    for (const auto& f : flags) out += "\n  note: " + f;
    return out;
}

LinearCodeFq gray_image(const SgqcCode& c) { return c.image(); }

std::optional<unsigned> min_lee_distance(const SgqcCode& c, std::uint64_t budget) {
    return min_distance(c.image(), budget);
}

ComponentReduction component_distance_reduction(const SgqcCode& c, std::uint64_t budget) {
    if (c.profile().ring.tag != RingTag::S || c.convention() != SpanConvention::FullModule)
        throw HypothesisError(
            "component reduction requires a full-module CRT combination over S; use min_distance");
    const LinearCodeFq& c1 = c.component(1);
    const LinearCodeFq& c2 = c.component(2);
    ComponentReduction out;
    out.k = c1.k() + c2.k();
    std::optional<unsigned> d1 = min_distance(c1, budget);
    std::optional<unsigned> d2 = min_distance(c2, budget);
    if (d1 && d2)
        out.d = std::min(*d1, *d2);
    else if (d1 || d2)
        out.d = d1 ? *d1 : *d2; // one component is the zero code
    const unsigned q = c.profile().ring.field->q();
    long double direct = std::pow(static_cast<long double>(q), static_cast<long double>(out.k));
    if (direct <= 1e6L) {
        std::optional<unsigned> dd = min_distance(c.image_full_module(), budget);
        if (dd != out.d)
            throw Error("component reduction disagrees with direct enumeration (internal defect)");
        out.cross_checked = true;
    }
    return out;
}

std::size_t rank_over_gray(const BlockProfile& profile, const std::vector<PolyTuple>& rows,
                           SpanConvention convention) {
    if (rows.empty()) return 0;
    return span_basis(profile, rows, convention).rank();
}

namespace {

ClosureReport closure_of(const BlockProfile& profile, const LinearCodeFq& space) {
    ClosureReport rep;
    const FieldSpec& F = *profile.ring.field;
    const bool over_s = profile.ring.tag == RingTag::S;
    RrefBasis basis(F, space.n);
    for (const auto& row : space.basis) basis.insert(row);
    for (const auto& row : space.basis) {
        std::vector<SElement> sv;
        if (over_s) {
            sv = gray_unmap(row);
        } else {
            sv.reserve(row.size());
            for (const FieldElement& e : row) sv.push_back(SElement::from_field(e));
        }
        std::vector<SElement> shifted = sigma_l(profile, sv);
        FqVec img;
        if (over_s) {
            img = gray_map(shifted);
        } else {
            img.reserve(shifted.size());
            for (const SElement& e : shifted) img.push_back(e.a());
        }
        if (!basis.contains(img)) {
            rep.passed = false;
            std::string w;
            for (const SElement& e : sv) w += e.to_string() + " ";
            std::string s;
            for (const SElement& e : shifted) s += e.to_string() + " ";
            rep.violator = "row (" + w + ") shifts to (" + s + ") outside the row space";
            return rep;
        }
    }
    return rep;
}

} // namespace

ClosureReport verify_closure(const SgqcCode& c) { return closure_of(c.profile(), c.image()); }

ClosureReport verify_closure_space(const BlockProfile& profile, const LinearCodeFq& space) {
    return closure_of(profile, space);
}

ParamReport analyze(const SgqcCode& c, std::uint64_t budget) {
    auto start = std::chrono::steady_clock::now();
    ParamReport rep;
    rep.convention = convention_name(c.convention());
    rep.n = c.image().n;
    rep.k = c.image().k();
    rep.flags = c.flags();
    const unsigned q = c.profile().ring.field->q();
    if (c.profile().ring.tag == RingTag::S && c.convention() == SpanConvention::FullModule) {
        ComponentReduction red = component_distance_reduction(c, budget);
        rep.d = red.d;
        long double count1 = std::pow(static_cast<long double>(q),
                                      static_cast<long double>(c.component(1).k()));
        long double count2 = std::pow(static_cast<long double>(q),
                                      static_cast<long double>(c.component(2).k()));
        rep.enumerated = static_cast<std::uint64_t>(std::min(count1 + count2, 1e18L));
        if (red.cross_checked) rep.flags.push_back("component reduction cross-checked by direct enumeration");
    } else {
        try {
            rep.d = min_distance(c.image(), budget);
            long double count = std::pow(static_cast<long double>(q),
                                         static_cast<long double>(rep.k));
            rep.enumerated = static_cast<std::uint64_t>(std::min(count, 1e18L));
        } catch (const BudgetError& e) {
            rep.flags.push_back(std::string("distance not computed: ") + e.what());
        }
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

} // namespace sgqc
