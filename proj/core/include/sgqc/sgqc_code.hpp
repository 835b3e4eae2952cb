#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgqc/linalg.hpp"
#include "sgqc/skew_cyclic.hpp"
#include "sgqc/skew_poly.hpp"

namespace sgqc {

/// Block structure (t_1, ..., t_l) of an SGQC code: total length
/// N = sum t_i, index l, and shift period M = lcm(m_t, t_1, ..., t_l),
/// the minimal k with sigma_l^k = identity.
struct BlockProfile {
    SkewRing ring;
    std::vector<unsigned> blocks;

    BlockProfile(SkewRing r, std::vector<unsigned> b);

    unsigned N() const;
    std::size_t index() const { return blocks.size(); }
    unsigned shift_period() const;
    /// Coordinate offset of block i in the concatenated length-N vector.
    unsigned offset(std::size_t i) const;

    bool operator==(const BlockProfile& o) const {
        return ring == o.ring && blocks == o.blocks;
    }
    bool operator!=(const BlockProfile& o) const { return !(*this == o); }
};

/// The mu-representation: one polynomial per block, the i-th reduced
/// modulo x^{t_i} - 1.
struct PolyTuple {
    std::vector<SkewPoly> comps;
};

PolyTuple make_poly_tuple(const BlockProfile& profile, std::vector<SkewPoly> comps);
PolyTuple tuple_from_strings(const BlockProfile& profile, const std::vector<std::string>& texts);
std::vector<SElement> tuple_to_vector(const BlockProfile& profile, const PolyTuple& t);
PolyTuple vector_to_tuple(const BlockProfile& profile, std::span<const SElement> w);

/// Blockwise skew shift sigma_l(c) = (sigma(c_1), ..., sigma(c_l)).
std::vector<SElement> sigma_l(const BlockProfile& profile, std::span<const SElement> word);

/// Left-module law: s(x) . a(x) = (s(x) a_1(x), ..., s(x) a_l(x)), each
/// component reduced mod x^{t_i} - 1.
PolyTuple module_mul(const SkewPoly& s, const BlockProfile& profile, const PolyTuple& a);

/// Span conventions for the row space a generator ledger spawns.
/// PaperTable takes the F_q-row space of the Gray images of the shift
/// rows x^j * row (0 <= j < M); FullModule additionally includes
/// v * x^j * row, giving the Gray image of the complete S[x;theta]-span.
enum class SpanConvention { PaperTable, FullModule };

std::string convention_name(SpanConvention c);

struct BuildOptions {
    SpanConvention convention = SpanConvention::PaperTable;
    bool strict_divisors = false;
    bool theorem17_checks = false;
};

/// Skew generalized quasi-cyclic code: a block profile, a generator
/// ledger of rho polynomial tuples, and derived data (image row space,
/// CRT component codes, parity check for one-generator codes, and the
/// triangular-ledger rank bookkeeping). Immutable after construction.
class SgqcCode {
public:
    const BlockProfile& profile() const { return profile_; }
    const std::vector<PolyTuple>& ledger() const { return ledger_; }
    SpanConvention convention() const { return convention_; }

    /// Row space of the code under the active convention: the Gray image
    /// (length 2N over F_q) for codes over S, the plain row space
    /// (length N) for codes over F_q.
    const LinearCodeFq& image() const { return image_; }
    /// Gray image of the full S[x;theta]-module span, independent of the
    /// active convention (equals image() under FullModule).
    LinearCodeFq image_full_module() const;
    /// CRT component codes over F_q of length N (codes over S only).
    const LinearCodeFq& component(int which) const;

    /// Minimal monic parity-check polynomial f with f * e = 0 blockwise
    /// (one-generator codes only).
    const SkewPoly& parity_check() const;
    bool has_parity_check() const { return parity_.has_value(); }
    /// The lclm-formula value of the parity check, kept alongside the
    /// minimal annihilator; a mismatch is surfaced in flags().
    const SkewPoly& parity_check_formula() const;

    /// Natural generator matrix: x^j * e for j < deg f for one-generator
    /// codes; for triangular ledgers, row i shifted deg q_{t_i} times.
    const std::vector<std::vector<SElement>>& printed_rows() const { return printed_rows_; }

    /// Per-row deg q_{t_i} of a triangular ledger, the formula rank
    /// Sum deg q_{t_i} and the cardinality exponent (|C| = q^exponent);
    /// empty when the ledger is not triangular.
    const std::vector<unsigned>& formula_row_degrees() const { return thm18_deg_q_; }
    std::optional<std::uint64_t> formula_rank() const { return thm18_rank_; }
    std::optional<std::uint64_t> formula_cardinality_log_q() const { return thm18_card_log_q_; }

    const std::vector<std::string>& flags() const { return flags_; }

    friend SgqcCode build_1gen(const BlockProfile&, const PolyTuple&, const BuildOptions&);
    friend SgqcCode build_rho_gen(const BlockProfile&, const std::vector<PolyTuple>&,
                                  const BuildOptions&);

private:
    SgqcCode(BlockProfile p, std::vector<PolyTuple> l, SpanConvention c)
        : profile_(std::move(p)), ledger_(std::move(l)), convention_(c) {}

    static SgqcCode build_impl(const BlockProfile& profile, std::vector<PolyTuple> ledger,
                               const BuildOptions& opts, bool one_gen);

    BlockProfile profile_;
    std::vector<PolyTuple> ledger_;
    SpanConvention convention_;
    LinearCodeFq image_;
    LinearCodeFq comp1_, comp2_;
    std::optional<SkewPoly> parity_;
    std::optional<SkewPoly> parity_formula_;
    std::vector<std::vector<SElement>> printed_rows_;
    std::vector<unsigned> thm18_deg_q_;
    std::optional<std::uint64_t> thm18_rank_;
    std::optional<std::uint64_t> thm18_card_log_q_;
    std::vector<std::string> flags_;
};

/// One-generator code spanned by e = (e_1, ..., e_l). With
/// strict_divisors each nonzero e_i must right-divide x^{t_i} - 1.
SgqcCode build_1gen(const BlockProfile& profile, const PolyTuple& e,
                    const BuildOptions& opts = {});

/// rho-generator code from a ledger of tuple rows. theorem17_checks
/// validates the triangular-form conventions (deg p_ij < deg f_{t_j} and
/// q_{t_i} p_{i,i-1} in <f_{t_{i-1}}>) and reports violations per row.
SgqcCode build_rho_gen(const BlockProfile& profile, const std::vector<PolyTuple>& ledger,
                       const BuildOptions& opts = {});

/// Minimal monic f with f . a = 0 in every block, found by row reduction
/// over the shift span (CRT-componentwise over S).
SkewPoly minimal_annihilator(const BlockProfile& profile, const PolyTuple& a);

/// The lclm formula: f = lclm_i { (x^{t_i}-1) / gcld(a_i, x^{t_i}-1) },
/// computed CRT-componentwise over S when a Euclidean chain degenerates.
SkewPoly parity_check_formula(const BlockProfile& profile, const PolyTuple& a);

/// Parity check of a one-generator code (the stored minimal annihilator).
const SkewPoly& parity_check_1gen(const SgqcCode& code);

/// RREF basis of the span a ledger generates under a convention; the
/// image row space of a would-be code without building one.
RrefBasis span_basis(const BlockProfile& profile, const std::vector<PolyTuple>& ledger,
                     SpanConvention convention);

/// (1-v)C1 + vC2. One-generator inputs combine into the single joined
/// generator (1-v)f + vg; general ledgers combine as the union of
/// (1-v)-scaled and v-scaled rows. The result uses the full-module
/// convention.
SgqcCode combine_crt_sgqc(const SgqcCode& c1, const SgqcCode& c2);

/// CRT component codes of a code over S, as codes over F_q.
std::pair<SgqcCode, SgqcCode> crt_split_sgqc(const SgqcCode& c);

/// psi_j(a x^i) = theta^{-i}(a) x^{t_j - i} extended linearly, with
/// x^{t_j} reduced to 1.
SkewPoly hermitian_conjugate(const SkewPoly& p, unsigned t_j);

/// a(x) * b(x) = sum_i a_i(x) psi_i(b_i(x)), each block product reduced
/// mod x^{t_i} - 1; callers test the result for vanishing.
SkewPoly hermitian_product(const BlockProfile& profile, const PolyTuple& a, const PolyTuple& b);

/// Euclidean dual, computed CRT-componentwise as null spaces over F_q.
/// The witness carries the dual's generator rows over S, its Gray row
/// space and the results of the closure / orthogonality checks.
struct DualWitness {
    std::vector<std::vector<SElement>> rows;
    LinearCodeFq gray;
    std::string product_convention;
    bool closure_ok = false;
    bool orthogonality_ok = false;
    std::optional<bool> hermitian_ok; // Theorem 4 identity; only when m_t | t_j for all j
};
DualWitness dual_code(const SgqcCode& c);

/// C equals its dual as Gray row spaces (full-module for codes over S).
bool is_self_dual(const SgqcCode& c);

/// BCH-type designed-distance bound min(d1, d2) of a CRT combination.
unsigned bch_bound(unsigned d1, unsigned d2);

/// Number of 1-generator SGQC codes over S for this profile:
/// per-block skew cyclic counts multiplied; requires gcd(t_i, m_t) = 1
/// (and gcd(t_i, q) = 1) for every block.
std::uint64_t count_1gen_sgqc(const BlockProfile& profile);

/// Per-block generators of the zero-tail submodules
/// K_i = { p_i : (a_1, ..., a_{i-1}, p_i, 0, ..., 0) in C }.
std::vector<SkewPoly> kset_generators(const SgqcCode& c);

} // namespace sgqc
