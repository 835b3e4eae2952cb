#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgqc/sgqc_code.hpp"

namespace sgqc {

/// On-disk description of a code: field, automorphism exponent,
/// coefficient ring, block profile, generator ledger as polynomial
/// strings, span convention and requested analyses. Schema:
///
///   {
///     "field": {"p": 3, "d": 2, "modulus": [2,2,1]},   // modulus optional
///     "theta_t": 1,
///     "ring": "Fq" | "S",
///     "blocks": [t1, ...],
///     "generators": [["poly-string per block", ...], ...],
///     "convention": "paper-table" | "full-module",     // optional
///     "strict_divisors": false,                        // optional
///     "analyses": ["distance", ...],                   // optional
///     "budget": 100000000                              // optional
///   }
///
/// Validation happens before any construction; every polynomial string
/// must parse in the declared ring.
struct CodeSpecDoc {
    unsigned p = 2;
    unsigned d = 1;
    std::optional<std::vector<unsigned>> modulus;
    unsigned theta_t = 1;
    RingTag ring = RingTag::S;
    std::vector<unsigned> blocks;
    std::vector<std::vector<std::string>> generators;
    SpanConvention convention = SpanConvention::PaperTable;
    bool strict_divisors = false;
    std::vector<std::string> analyses;
    std::optional<std::uint64_t> budget;

    static CodeSpecDoc from_json_text(const std::string& text);
    static CodeSpecDoc from_file(const std::string& path);
    std::string to_json_text() const;

    const FieldSpec& field() const;
    SkewRing skew_ring() const;
    BlockProfile profile() const;
    std::vector<PolyTuple> ledger() const;
    SgqcCode build() const;
    SgqcCode build(SpanConvention conv) const;
};

} // namespace sgqc
