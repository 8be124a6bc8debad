#include "parafock/exactalg/sparse.hpp"

#include <algorithm>
#include <atomic>

namespace parafock {

BasisTag make_basis_tag(std::size_t dim)
{
    static std::atomic<std::uint64_t> next{1};
    return BasisTag{next.fetch_add(1), dim};
}

void require_same_basis(const BasisTag& a, const BasisTag& b, const char* what)
{
    if (!(a == b))
        throw BasisMismatch(std::string(what) + ": operands live on different bases");
}

// ---------------------------------------------------------------- SparseVec

SparseVec SparseVec::unit(BasisTag tag, Index i, GaussianRational value)
{
    SparseVec v(tag);
    v.add(i, value);
    return v;
}

GaussianRational SparseVec::at(Index i) const
{
    auto it = entries_.find(i);
    return it == entries_.end() ? GaussianRational() : it->second;
}

void SparseVec::add(Index i, const GaussianRational& value)
{
    if (value.is_zero())
        return;
    auto [it, inserted] = entries_.try_emplace(i, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero())
            entries_.erase(it);
    }
}

void SparseVec::axpy(const GaussianRational& scale, const SparseVec& other)
{
    require_same_basis(tag_, other.tag_, "SparseVec::axpy");
    if (scale.is_zero())
        return;
    const bool unit_scale = scale == GaussianRational(1);
    for (const auto& [i, v] : other.entries_)
        add(i, unit_scale ? v : scale * v);
}

SparseVec& SparseVec::operator+=(const SparseVec& o)
{
    axpy(GaussianRational(1), o);
    return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& o)
{
    axpy(GaussianRational(-1), o);
    return *this;
}

SparseVec& SparseVec::operator*=(const GaussianRational& s)
{
    if (s.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [i, v] : entries_)
        v *= s;
    return *this;
}

// ---------------------------------------------------------------- SparseOp

SparseOp SparseOp::identity(BasisTag tag)
{
    SparseOp op(tag, {0});
    for (Index j = 0; j < tag.dim; ++j)
        op.columns_.emplace_hint(op.columns_.end(), j, SparseVec::unit(tag, j));
    return op;
}

SparseOp SparseOp::zero(BasisTag tag, std::set<int> grading_shifts)
{
    return SparseOp(tag, std::move(grading_shifts));
}

SparseVec SparseOp::column(Index j) const
{
    auto it = columns_.find(j);
    return it == columns_.end() ? SparseVec(tag_) : it->second;
}

GaussianRational SparseOp::at(Index row, Index col) const
{
    auto it = columns_.find(col);
    return it == columns_.end() ? GaussianRational() : it->second.at(row);
}

std::size_t SparseOp::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& [j, c] : columns_)
        n += c.size();
    return n;
}

void SparseOp::add(Index row, Index col, const GaussianRational& value)
{
    if (value.is_zero())
        return;
    auto [it, inserted] = columns_.try_emplace(col, tag_);
    it->second.add(row, value);
    if (it->second.empty())
        columns_.erase(it);
}

void SparseOp::set_column(Index col, SparseVec v)
{
    require_same_basis(tag_, v.tag(), "SparseOp::set_column");
    if (v.empty())
        columns_.erase(col);
    else
        columns_[col] = std::move(v);
}

SparseOp SparseOp::restricted(std::span<const Index> cols) const
{
    SparseOp out(tag_, shifts_);
    for (Index j : cols) {
        auto it = columns_.find(j);
        if (it != columns_.end())
            out.columns_.emplace(j, it->second);
    }
    return out;
}

namespace {

void merge_columns(SparseOp::Columns& dst, const SparseOp::Columns& src, const GaussianRational& scale, BasisTag tag)
{
    for (const auto& [j, col] : src) {
        auto [it, inserted] = dst.try_emplace(j, tag);
        it->second.axpy(scale, col);
        if (it->second.empty())
            dst.erase(it);
    }
}

}  // namespace

SparseOp& SparseOp::operator+=(const SparseOp& o)
{
    require_same_basis(tag_, o.tag_, "SparseOp::operator+");
    merge_columns(columns_, o.columns_, GaussianRational(1), tag_);
    shifts_.insert(o.shifts_.begin(), o.shifts_.end());
    return *this;
}

SparseOp& SparseOp::operator-=(const SparseOp& o)
{
    require_same_basis(tag_, o.tag_, "SparseOp::operator-");
    merge_columns(columns_, o.columns_, GaussianRational(-1), tag_);
    shifts_.insert(o.shifts_.begin(), o.shifts_.end());
    return *this;
}

SparseOp& SparseOp::operator*=(const GaussianRational& s)
{
    if (s.is_zero()) {
        columns_.clear();
        return *this;
    }
    for (auto& [j, c] : columns_)
        c *= s;
    return *this;
}

std::set<int> pairwise_sums(const std::set<int>& a, const std::set<int>& b)
{
    std::set<int> out;
    for (int x : a)
        for (int y : b)
            out.insert(x + y);
    return out;
}

SparseVec op_apply(const SparseOp& a, const SparseVec& v)
{
    require_same_basis(a.tag(), v.tag(), "op_apply");
    SparseVec out(a.tag());
    const auto& cols = a.columns();
    for (const auto& [j, coeff] : v.entries()) {
        auto it = cols.find(j);
        if (it != cols.end())
            out.axpy(coeff, it->second);
    }
    return out;
}

SparseOp operator*(const SparseOp& a, const SparseOp& b)
{
    require_same_basis(a.tag_, b.tag_, "SparseOp product");
    SparseOp out(a.tag_, pairwise_sums(a.shifts_, b.shifts_));
    for (const auto& [j, col] : b.columns_) {
        SparseVec c = op_apply(a, col);
        if (!c.empty())
            out.columns_.emplace_hint(out.columns_.end(), j, std::move(c));
    }
    return out;
}

bool SparseOp::equals_on(const SparseOp& o, std::span<const Index> cols) const
{
    require_same_basis(tag_, o.tag_, "SparseOp::equals_on");
    for (Index j : cols) {
        if (!(column(j) == o.column(j)))
            return false;
    }
    return true;
}

SparseOp commutator(const SparseOp& a, const SparseOp& b, bool anti)
{
    require_same_basis(a.tag(), b.tag(), "commutator");
    SparseOp out = a * b;
    if (anti)
        out += b * a;
    else
        out -= b * a;
    return out;
}

SparseOp commutator_on(const SparseOp& a, const SparseOp& b, std::span<const Index> cols, bool anti)
{
    require_same_basis(a.tag(), b.tag(), "commutator_on");
    SparseOp out = a * b.restricted(cols);
    if (anti)
        out += b * a.restricted(cols);
    else
        out -= b * a.restricted(cols);
    return out;
}

std::optional<GradingViolation> find_grading_violation(const SparseOp& op, std::span<const int> shell_of)
{
    if (shell_of.size() != op.tag().dim)
        throw std::invalid_argument("find_grading_violation: shell table does not match basis size");
    for (const auto& [j, col] : op.columns()) {
        for (const auto& [i, v] : col.entries()) {
            int shift = shell_of[i] - shell_of[j];
            if (!op.grading_shifts().contains(shift))
                return GradingViolation{i, j, shift};
        }
    }
    return std::nullopt;
}

std::optional<MatrixElement> worst_element(const SparseOp& op, std::span<const Index> cols)
{
    std::optional<MatrixElement> worst;
    mpq_class best = 0;
    for (Index j : cols) {
        auto it = op.columns().find(j);
        if (it == op.columns().end())
            continue;
        for (const auto& [i, v] : it->second.entries()) {
            mpq_class m = v.norm2();
            if (!worst || m > best) {
                best = m;
                worst = MatrixElement{i, j, v};
            }
        }
    }
    return worst;
}

}  // namespace parafock
