#ifndef PARAFOCK_EXACTALG_SPARSE_HPP
#define PARAFOCK_EXACTALG_SPARSE_HPP

#include "parafock/exactalg/gaussian_rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace parafock {

using Index = std::size_t;

/// Identifies the basis a vector or operator lives on. Two objects may be
/// combined only when their tags are equal.
struct BasisTag {
    std::uint64_t id = 0;
    std::size_t dim = 0;

    friend bool operator==(const BasisTag&, const BasisTag&) = default;
};

/// Fresh tag with a process-unique id.
BasisTag make_basis_tag(std::size_t dim);

class BasisMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void require_same_basis(const BasisTag& a, const BasisTag& b, const char* what);

class SparseVec {
public:
    using Entries = std::map<Index, GaussianRational>;

    SparseVec() = default;
    explicit SparseVec(BasisTag tag) : tag_(tag) {}

    static SparseVec unit(BasisTag tag, Index i, GaussianRational value = GaussianRational(1));

    const BasisTag& tag() const { return tag_; }
    const Entries& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    /// Coefficient at i, zero if absent.
    GaussianRational at(Index i) const;

    /// entries[i] += value; drops the entry if it cancels.
    void add(Index i, const GaussianRational& value);
    /// entries += scale * other
    void axpy(const GaussianRational& scale, const SparseVec& other);

    SparseVec& operator+=(const SparseVec& o);
    SparseVec& operator-=(const SparseVec& o);
    SparseVec& operator*=(const GaussianRational& s);

    friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
    friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
    friend SparseVec operator*(const GaussianRational& s, SparseVec v) { return v *= s; }

    /// Structural equality; tags must also agree.
    friend bool operator==(const SparseVec& a, const SparseVec& b)
    {
        return a.tag_ == b.tag_ && a.entries_ == b.entries_;
    }

    /// Copy with entries outside `keep` removed.
    template <typename Pred>
    SparseVec filtered(Pred keep) const
    {
        SparseVec out(tag_);
        for (const auto& [i, v] : entries_) {
            if (keep(i))
                out.entries_.emplace_hint(out.entries_.end(), i, v);
        }
        return out;
    }

private:
    BasisTag tag_;
    Entries entries_;
};

/// Sparse linear operator stored by columns. Columns that are absent are zero.
/// `grading_shifts` declares every allowed value of n(row) - n(col).
class SparseOp {
public:
    using Columns = std::map<Index, SparseVec>;

    SparseOp() = default;
    SparseOp(BasisTag tag, std::set<int> grading_shifts) : tag_(tag), shifts_(std::move(grading_shifts)) {}

    static SparseOp identity(BasisTag tag);
    static SparseOp zero(BasisTag tag, std::set<int> grading_shifts = {0});

    const BasisTag& tag() const { return tag_; }
    const std::set<int>& grading_shifts() const { return shifts_; }
    const Columns& columns() const { return columns_; }

    /// Column j, or an empty vector.
    SparseVec column(Index j) const;
    GaussianRational at(Index row, Index col) const;
    std::size_t nonzeros() const;
    bool is_zero() const { return columns_.empty(); }

    void add(Index row, Index col, const GaussianRational& value);
    void set_column(Index col, SparseVec v);

    /// Same operator with every column outside `cols` dropped.
    SparseOp restricted(std::span<const Index> cols) const;

    SparseOp& operator+=(const SparseOp& o);
    SparseOp& operator-=(const SparseOp& o);
    SparseOp& operator*=(const GaussianRational& s);

    friend SparseOp operator+(SparseOp a, const SparseOp& b) { return a += b; }
    friend SparseOp operator-(SparseOp a, const SparseOp& b) { return a -= b; }
    friend SparseOp operator*(const GaussianRational& s, SparseOp a) { return a *= s; }
    /// Operator product; grading shifts combine by pairwise sums.
    friend SparseOp operator*(const SparseOp& a, const SparseOp& b);

    friend bool operator==(const SparseOp& a, const SparseOp& b)
    {
        return a.tag_ == b.tag_ && a.columns_ == b.columns_;
    }

    /// Exact equality of the two operators on the given columns only.
    bool equals_on(const SparseOp& o, std::span<const Index> cols) const;

private:
    BasisTag tag_;
    std::set<int> shifts_{0};
    Columns columns_;
};

std::set<int> pairwise_sums(const std::set<int>& a, const std::set<int>& b);

SparseVec op_apply(const SparseOp& a, const SparseVec& v);

/// AB - BA, or AB + BA when anti is set.
SparseOp commutator(const SparseOp& a, const SparseOp& b, bool anti = false);

/// The bracket evaluated only on `cols`: A(B|cols) -/+ B(A|cols).
SparseOp commutator_on(const SparseOp& a, const SparseOp& b, std::span<const Index> cols, bool anti = false);

struct GradingViolation {
    Index row;
    Index col;
    int shift;
};

/// Full scan of the operator against its declared shifts; `shell_of[i]` is the
/// grading degree (total ur number) of basis index i.
std::optional<GradingViolation> find_grading_violation(const SparseOp& op, std::span<const int> shell_of);

/// The entry with the largest |value|^2 among the nonzero entries of `op`
/// restricted to `cols`; used to report failed identities.
struct MatrixElement {
    Index row;
    Index col;
    GaussianRational value;
};
std::optional<MatrixElement> worst_element(const SparseOp& op, std::span<const Index> cols);

}  // namespace parafock

#endif
