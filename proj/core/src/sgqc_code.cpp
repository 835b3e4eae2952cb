#include "sgqc/sgqc_code.hpp"

#include "sgqc/poly_text.hpp"

#include <algorithm>
#include <numeric>

namespace sgqc {

BlockProfile::BlockProfile(SkewRing r, std::vector<unsigned> b)
    : ring(r), blocks(std::move(b)) {
    if (blocks.empty()) throw SizeError("a block profile needs at least one block");
    for (unsigned t : blocks)
        if (t == 0) throw SizeError("block lengths must be positive");
}

unsigned BlockProfile::N() const {
    unsigned n = 0;
    for (unsigned t : blocks) n += t;
    return n;
}

unsigned BlockProfile::shift_period() const {
    std::uint64_t m = ring.aut_order();
    for (unsigned t : blocks) m = std::lcm<std::uint64_t>(m, t);
    return static_cast<unsigned>(m);
}

unsigned BlockProfile::offset(std::size_t i) const {
    unsigned off = 0;
    for (std::size_t j = 0; j < i; ++j) off += blocks[j];
    return off;
}

PolyTuple make_poly_tuple(const BlockProfile& profile, std::vector<SkewPoly> comps) {
    if (comps.size() != profile.index())
        throw SizeError("tuple has " + std::to_string(comps.size()) + " components for " +
                        std::to_string(profile.index()) + " blocks");
    PolyTuple t;
    t.comps.reserve(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].ring() != profile.ring)
            throw SpecMismatchError("tuple component ring differs from the profile ring");
        t.comps.push_back(comps[i].reduce_mod_xn_minus_1(profile.blocks[i]));
    }
    return t;
}

PolyTuple tuple_from_strings(const BlockProfile& profile, const std::vector<std::string>& texts) {
    std::vector<SkewPoly> comps;
    comps.reserve(texts.size());
    for (const std::string& s : texts) comps.push_back(parse_poly(profile.ring, s));
    return make_poly_tuple(profile, std::move(comps));
}

std::vector<SElement> tuple_to_vector(const BlockProfile& profile, const PolyTuple& t) {
    std::vector<SElement> w;
    w.reserve(profile.N());
    for (std::size_t i = 0; i < profile.index(); ++i) {
        for (unsigned j = 0; j < profile.blocks[i]; ++j) w.push_back(t.comps[i].coeff(j));
    }
    return w;
}

PolyTuple vector_to_tuple(const BlockProfile& profile, std::span<const SElement> w) {
    if (w.size() != profile.N()) throw SizeError("vector length does not match the profile");
    PolyTuple t;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < profile.index(); ++i) {
        std::vector<SElement> c(w.begin() + pos, w.begin() + pos + profile.blocks[i]);
        pos += profile.blocks[i];
        t.comps.emplace_back(profile.ring, std::move(c));
    }
    return t;
}

std::vector<SElement> sigma_l(const BlockProfile& profile, std::span<const SElement> word) {
    if (word.size() != profile.N()) throw SizeError("word shape does not match the profile");
    Automorphism th = profile.ring.aut();
    std::vector<SElement> out;
    out.reserve(word.size());
    std::size_t pos = 0;
    for (unsigned t : profile.blocks) {
        auto block = word.subspan(pos, t);
        auto shifted = sigma(block, th);
        out.insert(out.end(), shifted.begin(), shifted.end());
        pos += t;
    }
    return out;
}

PolyTuple module_mul(const SkewPoly& s, const BlockProfile& profile, const PolyTuple& a) {
    if (s.ring() != profile.ring)
        throw SpecMismatchError("module multiplier from a different ring");
    PolyTuple out;
    out.comps.reserve(profile.index());
    for (std::size_t i = 0; i < profile.index(); ++i)
        out.comps.push_back((s * a.comps[i]).reduce_mod_xn_minus_1(profile.blocks[i]));
    return out;
}

std::string convention_name(SpanConvention c) {
    return c == SpanConvention::PaperTable ? "paper-table" : "full-module";
}

namespace {

FqVec a_parts(std::span<const SElement> w) {
    FqVec out;
    out.reserve(w.size());
    for (const SElement& s : w) out.push_back(s.a());
    return out;
}

std::vector<SElement> v_scale(std::span<const SElement> w) {
    std::vector<SElement> out;
    out.reserve(w.size());
    if (w.empty()) return out;
    SElement vv = SElement::v(w[0].spec());
    for (const SElement& s : w) out.push_back(vv * s);
    return out;
}

FqVec crt_part(std::span<const SElement> w, int which) {
    FqVec out;
    out.reserve(w.size());
    for (const SElement& s : w) out.push_back(which == 1 ? s.crt1() : s.crt2());
    return out;
}

} // namespace

RrefBasis span_basis(const BlockProfile& profile, const std::vector<PolyTuple>& ledger,
                     SpanConvention convention) {
    const FieldSpec& F = *profile.ring.field;
    const unsigned N = profile.N();
    const unsigned M = profile.shift_period();
    const bool over_s = profile.ring.tag == RingTag::S;
    RrefBasis basis(F, over_s ? 2 * N : N);
    for (const PolyTuple& row : ledger) {
        std::vector<SElement> w = tuple_to_vector(profile, row);
        for (unsigned j = 0; j < M; ++j) {
            if (over_s) {
                basis.insert(gray_map(w));
                if (convention == SpanConvention::FullModule) basis.insert(gray_map(v_scale(w)));
            } else {
                basis.insert(a_parts(w));
            }
            w = sigma_l(profile, w);
        }
    }
    return basis;
}

SkewPoly minimal_annihilator(const BlockProfile& profile, const PolyTuple& a) {
    const SkewRing ring = profile.ring;
    const FieldSpec& F = *ring.field;
    const unsigned N = profile.N();
    if (ring.tag == RingTag::S) {
        // componentwise annihilators, degree-matched and CRT-joined
        BlockProfile comp(ring.with_tag(RingTag::Fq), profile.blocks);
        PolyTuple a1, a2;
        for (const SkewPoly& p : a.comps) {
            auto [p1, p2] = crt_split(p);
            a1.comps.push_back(p1);
            a2.comps.push_back(p2);
        }
        SkewPoly f1 = minimal_annihilator(comp, a1);
        SkewPoly f2 = minimal_annihilator(comp, a2);
        int target = std::max(f1.degree(), f2.degree());
        SkewRing cr = comp.ring;
        SkewPoly u1 = SkewPoly::x_pow(cr, static_cast<unsigned>(target - f1.degree())) * f1;
        SkewPoly u2 = SkewPoly::x_pow(cr, static_cast<unsigned>(target - f2.degree())) * f2;
        return crt_join(u1, u2);
    }
    // scan: minimal k with x^k . a inside the F_q span of lower shifts
    RrefBasis basis(F, N);
    std::vector<SElement> w = tuple_to_vector(profile, a);
    std::vector<SElement> cur = w;
    for (unsigned k = 0; k <= N + 1; ++k) {
        FqVec vec = a_parts(cur);
        if (auto coords = basis.coordinates(vec)) {
            std::vector<SElement> c(k + 1, ring.zero());
            for (unsigned j = 0; j < k; ++j) c[j] = -SElement::from_field((*coords)[j]);
            c[k] = ring.one();
            return SkewPoly(ring, std::move(c));
        }
        basis.insert(vec);
        cur = sigma_l(profile, cur);
    }
    throw Error("minimal annihilator not found within degree N (internal defect)");
}

namespace {

// gcld with CRT fallback, returning the right quotient (x^t - 1) / gcld.
SkewPoly annihilator_factor(const SkewRing& ring, const SkewPoly& a, unsigned t) {
    SkewPoly xt = SkewPoly::x_pow_minus_one(ring, t);
    if (a.is_zero()) return SkewPoly::one(ring);
    try {
        SkewPoly d = gcld(a, xt);
        return left_divide(xt, d).quotient;
    } catch (const EuclideanChainError&) {
        if (ring.tag != RingTag::S) throw;
        auto [a1, a2] = crt_split(a);
        SkewRing comp = ring.with_tag(RingTag::Fq);
        SkewPoly q1 = annihilator_factor(comp, a1, t);
        SkewPoly q2 = annihilator_factor(comp, a2, t);
        return crt_join(q1, q2);
    }
}

SkewPoly lclm_crt(const SkewPoly& a, const SkewPoly& b) {
    try {
        return lclm(a, b);
    } catch (const EuclideanChainError&) {
        if (a.ring().tag != RingTag::S) throw;
        auto [a1, a2] = crt_split(a);
        auto [b1, b2] = crt_split(b);
        SkewPoly l1 = lclm(a1, b1);
        SkewPoly l2 = lclm(a2, b2);
        int target = std::max(l1.degree(), l2.degree());
        SkewRing comp = a.ring().with_tag(RingTag::Fq);
        SkewPoly u1 = SkewPoly::x_pow(comp, static_cast<unsigned>(target - l1.degree())) * l1;
        SkewPoly u2 = SkewPoly::x_pow(comp, static_cast<unsigned>(target - l2.degree())) * l2;
        return crt_join(u1, u2);
    }
}

} // namespace

SkewPoly parity_check_formula(const BlockProfile& profile, const PolyTuple& a) {
    const SkewRing ring = profile.ring;
    SkewPoly f = SkewPoly::one(ring);
    for (std::size_t i = 0; i < profile.index(); ++i) {
        SkewPoly c = annihilator_factor(ring, a.comps[i], profile.blocks[i]);
        f = c.degree() == 0 ? f : (f.degree() == 0 ? c : lclm_crt(f, c));
    }
    return f;
}

namespace {

struct TriangularInfo {
    bool triangular = false;
    std::vector<unsigned> deg_q;
    std::vector<std::string> violations; // Theorem 17 convention violations
};

TriangularInfo inspect_triangular(const BlockProfile& profile, const std::vector<PolyTuple>& ledger,
                                  bool check_thm17) {
    TriangularInfo info;
    const std::size_t l = profile.index();
    if (ledger.size() != l) return info;
    for (std::size_t i = 0; i < l; ++i) {
        if (ledger[i].comps[i].is_zero()) return info;
        for (std::size_t j = i + 1; j < l; ++j)
            if (!ledger[i].comps[j].is_zero()) return info;
    }
    info.triangular = true;
    for (std::size_t i = 0; i < l; ++i) {
        const SkewPoly& diag = ledger[i].comps[i];
        info.deg_q.push_back(profile.blocks[i] - static_cast<unsigned>(diag.degree()));
    }
    if (!check_thm17) return info;
    for (std::size_t i = 1; i < l; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const SkewPoly& p = ledger[i].comps[j];
            const SkewPoly& fj = ledger[j].comps[j];
            if (!p.is_zero() && p.degree() >= fj.degree())
                info.violations.push_back("row " + std::to_string(i + 1) + ": deg p_" +
                                          std::to_string(i + 1) + std::to_string(j + 1) +
                                          " >= deg f_t" + std::to_string(j + 1));
        }
        // q_{t_i} p_{i,i-1} must lie in <f_{t_{i-1}}>
        const SkewPoly& fi = ledger[i].comps[i];
        const SkewPoly& p = ledger[i].comps[i - 1];
        if (p.is_zero()) continue;
        try {
            SkewPoly qi = right_divide(SkewPoly::x_pow_minus_one(profile.ring, profile.blocks[i]), fi).quotient;
            SkewPoly prod = (qi * p).reduce_mod_xn_minus_1(profile.blocks[i - 1]);
            if (!prod.is_zero() && !is_right_divisor(ledger[i - 1].comps[i - 1], prod))
                info.violations.push_back("row " + std::to_string(i + 1) +
                                          ": q_t" + std::to_string(i + 1) + " * p not in <f_t" +
                                          std::to_string(i) + ">");
        } catch (const Error& e) {
            info.violations.push_back("row " + std::to_string(i + 1) +
                                      ": Theorem 17 check not computable: " + e.what());
        }
    }
    return info;
}

} // namespace

SgqcCode SgqcCode::build_impl(const BlockProfile& profile, std::vector<PolyTuple> ledger,
                              const BuildOptions& opts, bool one_gen) {
    if (ledger.empty()) throw SizeError("a code needs at least one generator row");
    // normalize rows
    for (PolyTuple& row : ledger) row = make_poly_tuple(profile, row.comps);

    if (opts.strict_divisors) {
        for (std::size_t r = 0; r < ledger.size(); ++r) {
            for (std::size_t i = 0; i < profile.index(); ++i) {
                const SkewPoly& e = ledger[r].comps[i];
                if (e.is_zero()) continue;
                if (!is_right_divisor(e, SkewPoly::x_pow_minus_one(profile.ring, profile.blocks[i])))
                    throw DivisorError("row " + std::to_string(r + 1) + ", block " +
                                       std::to_string(i + 1) +
                                       ": generator component does not right-divide x^" +
                                       std::to_string(profile.blocks[i]) + " - 1");
            }
        }
    }

    TriangularInfo tri = inspect_triangular(profile, ledger, opts.theorem17_checks);
    if (opts.theorem17_checks) {
        if (!tri.triangular)
            throw ConventionError("Theorem 17 checks requested on a non-triangular ledger");
        if (!tri.violations.empty()) {
            std::string msg = "Theorem 17 convention violations:";
            for (const auto& v : tri.violations) msg += "\n  " + v;
            throw ConventionError(msg);
        }
    }

    SgqcCode code(profile, std::move(ledger), opts.convention);
    const FieldSpec& F = *profile.ring.field;
    const unsigned N = profile.N();
    const bool over_s = profile.ring.tag == RingTag::S;

    if (over_s) {
        RrefBasis b1(F, N), b2(F, N);
        const unsigned M = profile.shift_period();
        for (const PolyTuple& row : code.ledger_) {
            std::vector<SElement> w = tuple_to_vector(profile, row);
            for (unsigned j = 0; j < M; ++j) {
                b1.insert(crt_part(w, 1));
                b2.insert(crt_part(w, 2));
                w = sigma_l(profile, w);
            }
        }
        code.comp1_ = LinearCodeFq::from_basis(b1);
        code.comp2_ = LinearCodeFq::from_basis(b2);
    }

    if (one_gen) {
        code.parity_ = minimal_annihilator(profile, code.ledger_[0]);
        code.parity_formula_ = ::sgqc::parity_check_formula(profile, code.ledger_[0]);
        if (*code.parity_ != *code.parity_formula_)
            code.flags_.push_back("parity-check formula (" + code.parity_formula_->to_string() +
                                  ") differs from the minimal annihilator (" +
                                  code.parity_->to_string() + "); the minimal annihilator is used");
    }

    // natural generator matrix: deg f shifts of a single generator row,
    // or deg q_{t_i} shifts of row i for a triangular ledger
    if (one_gen && code.parity_) {
        unsigned depth = static_cast<unsigned>(std::max(0, code.parity_->degree()));
        std::vector<SElement> w = tuple_to_vector(profile, code.ledger_[0]);
        for (unsigned j = 0; j < depth; ++j) {
            code.printed_rows_.push_back(w);
            w = sigma_l(profile, w);
        }
    } else if (tri.triangular) {
        for (std::size_t i = 0; i < code.ledger_.size(); ++i) {
            std::vector<SElement> w = tuple_to_vector(profile, code.ledger_[i]);
            for (unsigned j = 0; j < tri.deg_q[i]; ++j) {
                code.printed_rows_.push_back(w);
                w = sigma_l(profile, w);
            }
        }
    }

    // The paper-table image is the row space of the generator matrix
    // itself (this is what reproduces the published parameters); the
    // full shift closure is the fallback when no natural matrix exists.
    const bool natural_matrix = (one_gen && code.parity_.has_value()) || tri.triangular;
    if (opts.convention == SpanConvention::PaperTable && natural_matrix) {
        RrefBasis basis(F, over_s ? 2 * N : N);
        for (const auto& w : code.printed_rows_)
            basis.insert(over_s ? gray_map(w) : a_parts(w));
        code.image_ = LinearCodeFq::from_basis(basis);
    } else if (opts.convention == SpanConvention::PaperTable) {
        code.image_ = LinearCodeFq::from_basis(span_basis(profile, code.ledger_, opts.convention));
        code.flags_.push_back("no natural generator matrix for this ledger; "
                              "paper-table image uses the full shift span");
    } else {
        code.image_ = LinearCodeFq::from_basis(span_basis(profile, code.ledger_, opts.convention));
    }

    if (tri.triangular) {
        code.thm18_deg_q_ = tri.deg_q;
        std::uint64_t rank = 0;
        for (unsigned d : tri.deg_q) rank += d;
        code.thm18_rank_ = rank;
        code.thm18_card_log_q_ = over_s ? 2 * rank : rank;
        std::uint64_t computed = over_s ? code.comp1_.k() + code.comp2_.k() : code.image_.k();
        if (computed != (over_s ? 2 * rank : rank))
            code.flags_.push_back("rank formula (" + std::to_string(over_s ? 2 * rank : rank) +
                                  " over F_q) disagrees with the computed module rank (" +
                                  std::to_string(computed) + "); the computed value is authoritative");
    }
    return code;
}

SgqcCode build_1gen(const BlockProfile& profile, const PolyTuple& e, const BuildOptions& opts) {
    return SgqcCode::build_impl(profile, {e}, opts, true);
}

SgqcCode build_rho_gen(const BlockProfile& profile, const std::vector<PolyTuple>& ledger,
                       const BuildOptions& opts) {
    return SgqcCode::build_impl(profile, ledger, opts, ledger.size() == 1);
}

LinearCodeFq SgqcCode::image_full_module() const {
    if (profile_.ring.tag != RingTag::S || convention_ == SpanConvention::FullModule) return image_;
    return LinearCodeFq::from_basis(span_basis(profile_, ledger_, SpanConvention::FullModule));
}

const LinearCodeFq& SgqcCode::component(int which) const {
    if (profile_.ring.tag != RingTag::S)
        throw SpecMismatchError("component codes exist only for codes over S");
    return which == 1 ? comp1_ : comp2_;
}

const SkewPoly& SgqcCode::parity_check() const {
    if (!parity_) throw Error("parity check is defined for one-generator codes only");
    return *parity_;
}

const SkewPoly& SgqcCode::parity_check_formula() const {
    if (!parity_formula_) throw Error("parity check is defined for one-generator codes only");
    return *parity_formula_;
}

const SkewPoly& parity_check_1gen(const SgqcCode& code) { return code.parity_check(); }

SgqcCode combine_crt_sgqc(const SgqcCode& c1, const SgqcCode& c2) {
    if (c1.profile() != c2.profile()) throw SpecMismatchError("profile mismatch in CRT combination");
    if (c1.profile().ring.tag != RingTag::Fq)
        throw SpecMismatchError("CRT combination takes component codes over F_q");
    BlockProfile sprof(c1.profile().ring.with_tag(RingTag::S), c1.profile().blocks);
    BuildOptions opts;
    opts.convention = SpanConvention::FullModule;
    if (c1.ledger().size() == 1 && c2.ledger().size() == 1) {
        // Theorem 11 form: single generator (1-v)f + vg, componentwise join
        std::vector<SkewPoly> comps;
        for (std::size_t i = 0; i < sprof.index(); ++i)
            comps.push_back(crt_join(c1.ledger()[0].comps[i], c2.ledger()[0].comps[i]));
        return build_1gen(sprof, make_poly_tuple(sprof, std::move(comps)), opts);
    }
    std::vector<PolyTuple> ledger;
    SElement one_minus_v = SElement::one_minus_v(*sprof.ring.field);
    SElement vv = SElement::v(*sprof.ring.field);
    for (const PolyTuple& row : c1.ledger()) {
        std::vector<SkewPoly> comps;
        for (const SkewPoly& p : row.comps) comps.push_back(p.scale_left(one_minus_v));
        ledger.push_back(make_poly_tuple(sprof, std::move(comps)));
    }
    for (const PolyTuple& row : c2.ledger()) {
        std::vector<SkewPoly> comps;
        for (const SkewPoly& p : row.comps) comps.push_back(p.scale_left(vv));
        ledger.push_back(make_poly_tuple(sprof, std::move(comps)));
    }
    return build_rho_gen(sprof, ledger, opts);
}

std::pair<SgqcCode, SgqcCode> crt_split_sgqc(const SgqcCode& c) {
    if (c.profile().ring.tag != RingTag::S)
        throw SpecMismatchError("CRT split takes a code over S");
    BlockProfile prof(c.profile().ring.with_tag(RingTag::Fq), c.profile().blocks);
    std::vector<PolyTuple> l1, l2;
    for (const PolyTuple& row : c.ledger()) {
        PolyTuple r1, r2;
        for (const SkewPoly& p : row.comps) {
            auto [p1, p2] = crt_split(p);
            r1.comps.push_back(p1);
            r2.comps.push_back(p2);
        }
        l1.push_back(std::move(r1));
        l2.push_back(std::move(r2));
    }
    BuildOptions opts;
    return {build_rho_gen(prof, l1, opts), build_rho_gen(prof, l2, opts)};
}

SkewPoly hermitian_conjugate(const SkewPoly& p, unsigned t_j) {
    const SkewRing ring = p.ring();
    Automorphism th = ring.aut();
    SkewPoly r = p.reduce_mod_xn_minus_1(t_j);
    std::vector<SElement> out(t_j, ring.zero());
    for (unsigned i = 0; i < t_j; ++i) {
        SElement a = r.coeff(i);
        if (a.is_zero()) continue;
        SElement conj(th.apply_pow(a.a(), -static_cast<long>(i)),
                      th.apply_pow(a.b(), -static_cast<long>(i)));
        unsigned pos = (t_j - i) % t_j;
        out[pos] = out[pos] + conj;
    }
    return SkewPoly(ring, std::move(out));
}

SkewPoly hermitian_product(const BlockProfile& profile, const PolyTuple& a, const PolyTuple& b) {
    const SkewRing ring = profile.ring;
    // Blocks of different lengths fold at different periods: coefficient w
    // of the combined product collects coefficient w mod t_i from block i
    // (each block product lives modulo its own x^{t_i} - 1).
    std::uint64_t period = 1;
    for (unsigned t : profile.blocks) period = std::lcm<std::uint64_t>(period, t);
    std::vector<SElement> acc(static_cast<std::size_t>(period), ring.zero());
    for (std::size_t i = 0; i < profile.index(); ++i) {
        SkewPoly prod = (a.comps[i] * hermitian_conjugate(b.comps[i], profile.blocks[i]))
                            .reduce_mod_xn_minus_1(profile.blocks[i]);
        for (std::size_t w = 0; w < acc.size(); ++w)
            acc[w] = acc[w] + prod.coeff(w % profile.blocks[i]);
    }
    return SkewPoly(ring, std::move(acc));
}

namespace {

bool all_blocks_divisible_by_order(const BlockProfile& profile) {
    unsigned m = profile.ring.aut_order();
    for (unsigned t : profile.blocks)
        if (t % m != 0) return false;
    return true;
}

} // namespace

DualWitness dual_code(const SgqcCode& c) {
    const BlockProfile& profile = c.profile();
    const FieldSpec& F = *profile.ring.field;
    const unsigned N = profile.N();
    DualWitness w;
    w.product_convention = "Euclidean (vectors over S, CRT-componentwise null spaces)";

    std::vector<std::vector<SElement>> primal_rows;
    {
        const unsigned M = profile.shift_period();
        for (const PolyTuple& row : c.ledger()) {
            std::vector<SElement> v = tuple_to_vector(profile, row);
            for (unsigned j = 0; j < M; ++j) {
                primal_rows.push_back(v);
                v = sigma_l(profile, v);
            }
        }
    }

    if (profile.ring.tag == RingTag::S) {
        FqMat d1 = nullspace(c.component(1).basis, F, N);
        FqMat d2 = nullspace(c.component(2).basis, F, N);
        for (const FqVec& u : d1) {
            std::vector<SElement> row;
            row.reserve(N);
            for (const FieldElement& e : u) row.push_back(SElement::from_crt(e, F.zero()));
            w.rows.push_back(std::move(row));
        }
        for (const FqVec& u : d2) {
            std::vector<SElement> row;
            row.reserve(N);
            for (const FieldElement& e : u) row.push_back(SElement::from_crt(F.zero(), e));
            w.rows.push_back(std::move(row));
        }
        RrefBasis gb(F, 2 * N);
        for (const auto& row : w.rows) gb.insert(gray_map(row));
        w.gray = LinearCodeFq::from_basis(gb);
    } else {
        FqMat d = nullspace(c.image().basis, F, N);
        for (const FqVec& u : d) w.rows.push_back(embed_field_vector(u));
        RrefBasis gb(F, N);
        for (const FqVec& u : d) gb.insert(u);
        w.gray = LinearCodeFq::from_basis(gb);
    }

    // orthogonality of every dual row against every primal generator row
    w.orthogonality_ok = true;
    for (const auto& dr : w.rows) {
        for (const auto& pr : primal_rows) {
            if (!inner_product(dr, pr).is_zero()) {
                w.orthogonality_ok = false;
                break;
            }
        }
        if (!w.orthogonality_ok) break;
    }

    // sigma_l-closure of the dual (Theorem 2)
    w.closure_ok = true;
    {
        RrefBasis gb(F, profile.ring.tag == RingTag::S ? 2 * N : N);
        for (const auto& row : w.gray.basis) gb.insert(row);
        for (const auto& row : w.gray.basis) {
            std::vector<SElement> sv = profile.ring.tag == RingTag::S
                                           ? gray_unmap(row)
                                           : embed_field_vector(row);
            std::vector<SElement> shifted = sigma_l(profile, sv);
            FqVec img = profile.ring.tag == RingTag::S ? gray_map(shifted) : a_parts(shifted);
            if (!gb.contains(img)) {
                w.closure_ok = false;
                break;
            }
        }
    }

    // Theorem 4: mu(C-dual) = mu(C)-dual under the Hermitian product,
    // checked on generator pairs when m_t divides every t_j
    if (profile.ring.tag == RingTag::S && all_blocks_divisible_by_order(profile)) {
        bool ok = true;
        for (const auto& pr : primal_rows) {
            PolyTuple pt = vector_to_tuple(profile, pr);
            for (const auto& dr : w.rows) {
                PolyTuple dt = vector_to_tuple(profile, dr);
                if (!hermitian_product(profile, pt, dt).is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        w.hermitian_ok = ok;
    }
    return w;
}

bool is_self_dual(const SgqcCode& c) {
    DualWitness d = dual_code(c);
    if (c.profile().ring.tag == RingTag::S)
        return c.image_full_module().same_code(d.gray);
    return c.image().same_code(d.gray);
}

unsigned bch_bound(unsigned d1, unsigned d2) { return std::min(d1, d2); }

std::uint64_t count_1gen_sgqc(const BlockProfile& profile) {
    std::uint64_t total = 1;
    for (unsigned t : profile.blocks) total *= count_skew_cyclic(t, profile.ring);
    return total;
}

namespace {

// Minimal-degree monic polynomial in an F_q coefficient space, found by
// row reduction on reversed coordinates.
SkewPoly minimal_degree_generator(const SkewRing& ring, const std::vector<FqVec>& vectors,
                                  unsigned width) {
    const FieldSpec& F = *ring.field;
    RrefBasis rev(F, width);
    for (const FqVec& v : vectors) {
        FqVec r(v.rbegin(), v.rend());
        rev.insert(r);
    }
    if (rev.rank() == 0) return SkewPoly::zero(ring);
    // the last pivot row has the most leading zeros in reversed
    // coordinates, i.e. the minimal degree in the original ones
    const FqVec& best = rev.rows().back();
    FqVec orig(best.rbegin(), best.rend());
    std::vector<SElement> c;
    c.reserve(width);
    for (const FieldElement& e : orig) c.push_back(SElement::from_field(e));
    return SkewPoly(ring.with_tag(RingTag::Fq), std::move(c)).monic();
}

} // namespace

std::vector<SkewPoly> kset_generators(const SgqcCode& c) {
    const BlockProfile& profile = c.profile();
    const FieldSpec& F = *profile.ring.field;
    const unsigned N = profile.N();
    const bool over_s = profile.ring.tag == RingTag::S;
    const std::size_t l = profile.index();
    const FqMat& B = c.image().basis;
    const std::size_t k = B.size();

    std::vector<SkewPoly> out;
    for (std::size_t i = 0; i < l; ++i) {
        // columns that must vanish: all blocks after block i (both Gray
        // halves over S)
        std::vector<std::size_t> tail;
        for (std::size_t j = i + 1; j < l; ++j) {
            unsigned off = profile.offset(j);
            for (unsigned s = 0; s < profile.blocks[j]; ++s) {
                tail.push_back(off + s);
                if (over_s) tail.push_back(N + off + s);
            }
        }
        // solve x B |_tail = 0 for message-space vectors x
        FqMat constraints;
        for (std::size_t col : tail) {
            FqVec row;
            row.reserve(k);
            for (std::size_t r = 0; r < k; ++r) row.push_back(B[r][col]);
            constraints.push_back(std::move(row));
        }
        FqMat xs = k == 0 ? FqMat{} : nullspace(constraints, F, k);
        // project the zero-tail codewords to block i, split into CRT parts
        std::vector<FqVec> part1, part2;
        unsigned off = profile.offset(i);
        for (const FqVec& x : xs) {
            FqVec word(c.image().n, F.zero());
            for (std::size_t r = 0; r < k; ++r) {
                if (x[r].is_zero()) continue;
                for (std::size_t cidx = 0; cidx < word.size(); ++cidx)
                    word[cidx] = word[cidx] + x[r] * B[r][cidx];
            }
            std::vector<SElement> sv = over_s ? gray_unmap(word) : embed_field_vector(word);
            FqVec p1, p2;
            for (unsigned s = 0; s < profile.blocks[i]; ++s) {
                p1.push_back(sv[off + s].crt1());
                p2.push_back(sv[off + s].crt2());
            }
            part1.push_back(std::move(p1));
            part2.push_back(std::move(p2));
        }
        SkewRing comp = profile.ring.with_tag(RingTag::Fq);
        SkewPoly g1 = minimal_degree_generator(comp, part1, profile.blocks[i]);
        if (over_s) {
            SkewPoly g2 = minimal_degree_generator(comp, part2, profile.blocks[i]);
            out.push_back(crt_join(g1, g2));
        } else {
            out.push_back(g1);
        }
    }
    return out;
}

} // namespace sgqc
