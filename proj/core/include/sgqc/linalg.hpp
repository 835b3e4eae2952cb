#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgqc/finite_field.hpp"

namespace sgqc {

using FqVec = std::vector<FieldElement>;
using FqMat = std::vector<FqVec>;

/// Incrementally maintained reduced row-echelon basis over F_q. Rows are
/// kept fully reduced and pivot-sorted, so two bases span the same space
/// iff their rows() compare equal. Insertion also tracks coordinates of
/// each reduced row in terms of the inserted generators, which lets
/// callers recover the combination expressing a member vector.
class RrefBasis {
public:
    RrefBasis(const FieldSpec& field, std::size_t width);

    /// Returns true if the vector enlarged the span.
    bool insert(const FqVec& v);
    bool contains(const FqVec& v) const;
    /// Coordinates of v in terms of the vectors passed to insert(), in
    /// insertion order; nullopt if v is outside the span.
    std::optional<FqVec> coordinates(const FqVec& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const FieldSpec& field() const { return *field_; }
    const FqMat& rows() const { return rows_; }

    bool equals(const RrefBasis& o) const;
    /// Stable serialization of the canonical rows, usable as a set key.
    std::string canonical_key() const;

private:
    const FieldSpec* field_;
    std::size_t width_;
    std::size_t inserted_ = 0;
    FqMat rows_;                 // pivot-sorted, fully reduced
    std::vector<std::size_t> pivots_;
    FqMat combos_;               // combos_[i]: rows_[i] in terms of inserted vectors
};

/// Basis of the right kernel {x : G x^T = 0} of the row space spanned by
/// `rows` (each of length width).
FqMat nullspace(const FqMat& rows, const FieldSpec& field, std::size_t width);

/// F_q-linear code held as a canonical RREF generator basis.
struct LinearCodeFq {
    const FieldSpec* field = nullptr;
    std::size_t n = 0;
    FqMat basis; // canonical RREF rows, linearly independent

    std::size_t k() const { return basis.size(); }

    static LinearCodeFq from_rows(const FieldSpec& field, std::size_t n, const FqMat& rows);
    static LinearCodeFq from_basis(const RrefBasis& b);

    bool contains(const FqVec& v) const;
    bool same_code(const LinearCodeFq& o) const;
    LinearCodeFq dual() const;
};

/// Reflected mixed-radix Gray enumeration: visits all q^k digit strings,
/// reporting one digit change (position, old value, new value) per step.
/// Returns the number of steps taken.
std::uint64_t gray_walk(unsigned q, unsigned k,
                        const std::function<void(unsigned pos, unsigned oldv, unsigned newv)>& step);

/// Minimum nonzero codeword weight by full message-space enumeration in
/// Gray-code order (one row add per step). Returns nullopt for k = 0.
/// Throws BudgetError if q^k - 1 exceeds `budget` message visits.
std::optional<unsigned> min_distance(const LinearCodeFq& code, std::uint64_t budget = 100000000ull);

} // namespace sgqc
