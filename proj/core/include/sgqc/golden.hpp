#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgqc/codespec.hpp"

namespace sgqc {

/// A transcribed reference case: the code-spec document, the published
/// [n,k,d] and the original compact notation kept for review.
struct GoldenCase {
    std::string id;
    CodeSpecDoc doc;
    unsigned expect_n = 0;
    unsigned expect_k = 0;
    unsigned expect_d = 0;
    std::string annotation;      // "*" near-optimal, "**" optimal, "" otherwise
    std::string source_notation; // the compact digit-string form, hand-transcribed
};

/// Two-generator reference rows; `table` filters to 1..3, 0 returns all.
std::vector<GoldenCase> golden_table_rows(int table = 0);

/// Worked one-generator reference codes (ex1, ex2 over S; ex6, ex7 over F_4).
std::vector<GoldenCase> golden_examples();

/// A displayed factorization x^n - 1 = product of skew factors.
/// `documented_typo` marks a display that provably cannot hold (its left
/// factor is not the division cofactor of its right factor); the
/// corrected identity is carried as a separate entry.
struct FactorizationIdentity {
    std::string id;
    unsigned p = 2, d = 2;
    unsigned theta_t = 1;
    RingTag ring = RingTag::Fq;
    unsigned n = 0;
    std::vector<std::string> factors; // multiplied left to right
    bool documented_typo = false;
};

std::vector<FactorizationIdentity> factorization_identities();

struct IdentityResult {
    std::string id;
    bool ok = false;
    std::string convention; // "default" or the substitution that validated
};

/// Multiplies the listed factors and compares against x^n - 1. On failure
/// over an extension field, retries every primitive-element reading of
/// the displayed "t" and reports the one that validates.
IdentityResult verify_identity(const FactorizationIdentity& ident);

} // namespace sgqc
