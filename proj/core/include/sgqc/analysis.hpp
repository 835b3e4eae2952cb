#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgqc/sgqc_code.hpp"

namespace sgqc {

/// Parameters of an analyzed code with the convention that produced them.
/// The minimum distance of the zero code stays unset, never 0.
struct ParamReport {
    std::string convention;
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<unsigned> d;
    std::uint64_t enumerated = 0;
    double elapsed_ms = 0.0;
    std::vector<std::string> flags;

    std::string params_string() const; // "[n,k,d]" with "?" for unset d
    std::string to_text() const;
};

/// Row space of the code per its active convention (Gray image over S).
LinearCodeFq gray_image(const SgqcCode& c);

/// min_distance(gray_image(C)): the Gray isometry reduces Lee distance
/// to Hamming distance.
std::optional<unsigned> min_lee_distance(const SgqcCode& c, std::uint64_t budget = 100000000ull);

struct ComponentReduction {
    std::size_t k = 0;
    std::optional<unsigned> d;
    bool cross_checked = false;
};

/// k = k1 + k2 and d = min(d1, d2) from the CRT component codes, costing
/// q^{k1} + q^{k2} instead of q^{k1+k2}. Requires a full-module code over
/// S; cross-validated against direct enumeration whenever
/// q^{k1+k2} <= 10^6.
ComponentReduction component_distance_reduction(const SgqcCode& c,
                                                std::uint64_t budget = 100000000ull);

/// Rank of the F_q span of the Gray images of the given generator rows
/// under a convention (shift rows, plus v-multiples under full-module).
std::size_t rank_over_gray(const BlockProfile& profile, const std::vector<PolyTuple>& rows,
                           SpanConvention convention);

struct ClosureReport {
    bool passed = true;
    std::string violator; // rendered witness row and its shift, when failed
};

/// Checks that sigma_l of every basis row of the image stays inside the
/// row space; failure is reported, not thrown.
ClosureReport verify_closure(const SgqcCode& c);
/// Same check for a bare row space over the profile (used for duals).
ClosureReport verify_closure_space(const BlockProfile& profile, const LinearCodeFq& space);

/// Full parameter report under the code's convention. Codes over S in
/// full-module convention are measured through the component reduction;
/// everything else enumerates the image directly.
ParamReport analyze(const SgqcCode& c, std::uint64_t budget = 100000000ull);

} // namespace sgqc
