#include "sgqc/linalg.hpp"

#include <algorithm>
#include <functional>

namespace sgqc {

RrefBasis::RrefBasis(const FieldSpec& field, std::size_t width)
    : field_(&field), width_(width) {}

namespace {

// Reduce v against (rows, pivots), accumulating the used combination of
// stored rows into acc (acc[i] += factor for rows[i]) when combos given.
void reduce_against(const FqMat& rows, const std::vector<std::size_t>& pivots,
                    FqVec& v, FqVec* acc, const FqMat* combos, const FieldSpec& field) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const FieldElement& c = v[pivots[i]];
        if (c.is_zero()) continue;
        FieldElement f = c; // pivot entries are 1
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * rows[i][j];
        if (acc && combos) {
            FqVec& combo = *acc;
            const FqVec& rc = (*combos)[i];
            for (std::size_t j = 0; j < rc.size() && j < combo.size(); ++j)
                combo[j] = combo[j] + f * rc[j];
        }
    }
    (void)field;
}

std::optional<std::size_t> leading(const FqVec& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) return j;
    return std::nullopt;
}

} // namespace

bool RrefBasis::insert(const FqVec& v) {
    if (v.size() != width_) throw SizeError("row width mismatch in RREF basis");
    std::size_t my_index = inserted_++;
    FqVec r = v;
    FqVec combo(inserted_, field_->zero());
    // grow older combos to the new length
    for (auto& c : combos_) c.resize(inserted_, field_->zero());
    combo[my_index] = field_->one();
    // combo tracks: r = (combination of inserted vectors) after reductions,
    // i.e. r = sum combo[j] * inserted_j at all times.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const FieldElement& c = r[pivots_[i]];
        if (c.is_zero()) continue;
        FieldElement f = c;
        for (std::size_t j = 0; j < width_; ++j) r[j] = r[j] - f * rows_[i][j];
        for (std::size_t j = 0; j < inserted_; ++j) combo[j] = combo[j] - f * combos_[i][j];
    }
    auto lead = leading(r);
    if (!lead) return false;
    FieldElement invLead = r[*lead].inverse();
    for (auto& x : r) x = invLead * x;
    for (auto& x : combo) x = invLead * x;
    // back-substitute into existing rows to keep the form fully reduced
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const FieldElement& c = rows_[i][*lead];
        if (c.is_zero()) continue;
        FieldElement f = c;
        for (std::size_t j = 0; j < width_; ++j) rows_[i][j] = rows_[i][j] - f * r[j];
        for (std::size_t j = 0; j < inserted_; ++j) combos_[i][j] = combos_[i][j] - f * combo[j];
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), *lead) - pivots_.begin();
    rows_.insert(rows_.begin() + pos, std::move(r));
    combos_.insert(combos_.begin() + pos, std::move(combo));
    pivots_.insert(pivots_.begin() + pos, *lead);
    return true;
}

bool RrefBasis::contains(const FqVec& v) const {
    if (v.size() != width_) throw SizeError("row width mismatch in RREF basis");
    FqVec r = v;
    reduce_against(rows_, pivots_, r, nullptr, nullptr, *field_);
    return !leading(r).has_value();
}

std::optional<FqVec> RrefBasis::coordinates(const FqVec& v) const {
    if (v.size() != width_) throw SizeError("row width mismatch in RREF basis");
    FqVec r = v;
    FqVec acc(inserted_, field_->zero());
    // r - sum acc = v holds after each reduction step
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const FieldElement& c = r[pivots_[i]];
        if (c.is_zero()) continue;
        FieldElement f = c;
        for (std::size_t j = 0; j < width_; ++j) r[j] = r[j] - f * rows_[i][j];
        for (std::size_t j = 0; j < inserted_; ++j) acc[j] = acc[j] + f * combos_[i][j];
    }
    if (leading(r).has_value()) return std::nullopt;
    return acc;
}

bool RrefBasis::equals(const RrefBasis& o) const {
    if (width_ != o.width_ || rows_.size() != o.rows_.size()) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i] != o.rows_[i]) return false;
    return true;
}

std::string RrefBasis::canonical_key() const {
    std::string key;
    key.reserve(rows_.size() * width_ * 2 + 8);
    for (const auto& row : rows_) {
        for (const auto& e : row) {
            key.push_back(static_cast<char>('0' + (e.index() & 0x1f)));
            key.push_back(static_cast<char>('a' + ((e.index() >> 5) & 0x1f)));
        }
        key.push_back('|');
    }
    return key;
}

FqMat nullspace(const FqMat& rows, const FieldSpec& field, std::size_t width) {
    RrefBasis b(field, width);
    for (const auto& r : rows) b.insert(r);
    const FqMat& rref = b.rows();
    std::vector<std::size_t> pivots;
    pivots.reserve(rref.size());
    for (const auto& r : rref)
        for (std::size_t j = 0; j < width; ++j)
            if (!r[j].is_zero()) { pivots.push_back(j); break; }
    std::vector<bool> is_pivot(width, false);
    for (auto p : pivots) is_pivot[p] = true;

    FqMat kernel;
    for (std::size_t free = 0; free < width; ++free) {
        if (is_pivot[free]) continue;
        FqVec v(width, field.zero());
        v[free] = field.one();
        // solve pivot entries: row_i . v = 0  =>  v[pivot_i] = -row_i[free]
        for (std::size_t i = 0; i < rref.size(); ++i) v[pivots[i]] = -rref[i][free];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

LinearCodeFq LinearCodeFq::from_rows(const FieldSpec& field, std::size_t n, const FqMat& rows) {
    RrefBasis b(field, n);
    for (const auto& r : rows) b.insert(r);
    return from_basis(b);
}

LinearCodeFq LinearCodeFq::from_basis(const RrefBasis& b) {
    LinearCodeFq c;
    c.field = &b.field();
    c.n = b.width();
    c.basis = b.rows();
    return c;
}

bool LinearCodeFq::contains(const FqVec& v) const {
    RrefBasis b(*field, n);
    for (const auto& r : basis) b.insert(r);
    return b.contains(v);
}

bool LinearCodeFq::same_code(const LinearCodeFq& o) const {
    return field == o.field && n == o.n && basis == o.basis;
}

LinearCodeFq LinearCodeFq::dual() const {
    FqMat kernel = nullspace(basis, *field, n);
    return LinearCodeFq::from_rows(*field, n, kernel);
}

std::uint64_t gray_walk(unsigned q, unsigned k,
                        const std::function<void(unsigned pos, unsigned oldv, unsigned newv)>& step) {
    if (k == 0) return 0;
    // Reflected mixed-radix Gray code with focus pointers: exactly one
    // digit changes by +-1 per visit.
    std::vector<unsigned> a(k, 0);
    std::vector<int> dir(k, 1);
    std::vector<unsigned> focus(k + 1);
    for (unsigned j = 0; j <= k; ++j) focus[j] = j;
    std::uint64_t steps = 0;
    for (;;) {
        unsigned j = focus[0];
        focus[0] = 0;
        if (j == k) break;
        unsigned oldv = a[j];
        a[j] = static_cast<unsigned>(static_cast<int>(a[j]) + dir[j]);
        step(j, oldv, a[j]);
        ++steps;
        if (a[j] == 0 || a[j] == q - 1) {
            dir[j] = -dir[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
    }
    return steps;
}

std::optional<unsigned> min_distance(const LinearCodeFq& code, std::uint64_t budget) {
    unsigned k = static_cast<unsigned>(code.k());
    if (k == 0) return std::nullopt;
    const FieldSpec& F = *code.field;
    unsigned q = F.q();
    long double total = 1;
    for (unsigned i = 0; i < k; ++i) total *= q;
    if (total - 1 > static_cast<long double>(budget))
        throw BudgetError("minimum-distance enumeration over budget",
                          static_cast<std::uint64_t>(std::min<long double>(total - 1, 1e18L)));

    // Precompute, for every row and every digit transition old -> new,
    // the support-restricted update (elem(new) - elem(old)) * row, so a
    // Gray step touches only nonzero coordinates. Digit values are field
    // element indices.
    struct SparseRow {
        std::vector<std::uint32_t> pos;
        // updates[v]: the increment for a step whose value difference has
        // index v, per support entry
        std::vector<std::vector<std::uint16_t>> updates;
    };
    std::vector<SparseRow> rows(k);
    for (unsigned i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < code.n; ++j) {
            const FieldElement& e = code.basis[i][j];
            if (e.is_zero()) continue;
            rows[i].pos.push_back(static_cast<std::uint32_t>(j));
        }
        rows[i].updates.assign(q, {});
        for (unsigned v = 0; v < q; ++v) {
            rows[i].updates[v].reserve(rows[i].pos.size());
            for (std::uint32_t p : rows[i].pos)
                rows[i].updates[v].push_back(
                    F.mul(static_cast<std::uint16_t>(v), code.basis[i][p].index()));
        }
    }

    std::vector<std::uint16_t> cw(code.n, 0);
    unsigned weight = 0;
    unsigned best = static_cast<unsigned>(code.n) + 1;
    gray_walk(q, k, [&](unsigned posn, unsigned oldv, unsigned newv) {
        const SparseRow& r = rows[posn];
        std::uint16_t diff = F.add(static_cast<std::uint16_t>(newv),
                                   F.neg(static_cast<std::uint16_t>(oldv)));
        const auto& upd = r.updates[diff];
        for (std::size_t i = 0; i < r.pos.size(); ++i) {
            std::uint16_t& c = cw[r.pos[i]];
            if (c != 0) --weight;
            c = F.add(c, upd[i]);
            if (c != 0) ++weight;
        }
        if (weight < best) best = weight;
    });
    return best;
}

} // namespace sgqc
