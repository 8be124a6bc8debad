#include "parafock/exactalg/linear.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace parafock {

namespace {

// Row in echelon form: sparse map column -> value, leading column first.
using Row = std::map<std::size_t, GaussianRational>;

// Incremental echelon basis. Each stored row has a distinct leading column,
// and every stored row is zero at the leading columns of earlier rows.
class Echelon {
public:
    // Reduces `row` against the stored rows. Returns true and stores it when
    // the remainder is nonzero.
    bool insert(Row row)
    {
        reduce(row);
        if (row.empty())
            return false;
        std::size_t lead = row.begin()->first;
        rows_.emplace(lead, std::move(row));
        return true;
    }

    void reduce(Row& row) const
    {
        // Leading columns are visited in increasing order; eliminating one can
        // only create entries at larger columns.
        auto it = row.begin();
        while (it != row.end()) {
            auto piv = rows_.find(it->first);
            if (piv == rows_.end()) {
                ++it;
                continue;
            }
            GaussianRational factor = it->second / piv->second.begin()->second;
            std::size_t col = it->first;
            for (const auto& [c, v] : piv->second) {
                auto [slot, inserted] = row.try_emplace(c, GaussianRational());
                slot->second -= factor * v;
                if (slot->second.is_zero())
                    row.erase(slot);
            }
            it = row.upper_bound(col);
        }
    }

    std::size_t size() const { return rows_.size(); }

    std::vector<std::size_t> leads() const
    {
        std::vector<std::size_t> out;
        for (const auto& [lead, r] : rows_)
            out.push_back(lead);
        return out;
    }

private:
    std::map<std::size_t, Row> rows_;
};

}  // namespace

std::size_t rank(std::span<const SparseVec> vectors)
{
    Echelon ech;
    for (const auto& v : vectors) {
        require_same_basis(vectors.front().tag(), v.tag(), "rank");
        Row row;
        for (const auto& [i, x] : v.entries())
            row.emplace(i, x);
        ech.insert(std::move(row));
    }
    return ech.size();
}

std::optional<GaussianRational> proportionality(const SparseVec& v, const SparseVec& u)
{
    require_same_basis(v.tag(), u.tag(), "proportionality");
    if (u.empty())
        throw std::invalid_argument("proportionality: reference vector is zero");
    if (v.empty())
        return GaussianRational();
    const auto& [i0, u0] = *u.entries().begin();
    GaussianRational c = v.at(i0) / u0;
    SparseVec diff = v;
    diff.axpy(-c, u);
    if (!diff.empty())
        return std::nullopt;
    return c;
}

std::vector<GaussianRational> solve_square(std::vector<std::vector<GaussianRational>> a, std::vector<GaussianRational> b)
{
    const std::size_t n = b.size();
    if (a.size() != n)
        throw std::invalid_argument("solve_square: shape mismatch");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k].is_zero())
            ++p;
        if (p == n)
            throw std::domain_error("solve_square: singular system");
        std::swap(a[p], a[k]);
        std::swap(b[p], b[k]);
        GaussianRational inv = GaussianRational(1) / a[k][k];
        for (std::size_t c = k; c < n; ++c)
            a[k][c] *= inv;
        b[k] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || a[r][k].is_zero())
                continue;
            GaussianRational f = a[r][k];
            for (std::size_t c = k; c < n; ++c)
                a[r][c] -= f * a[k][c];
            b[r] -= f * b[k];
        }
    }
    return b;
}

SpanSolver::SpanSolver(std::span<const SparseOp> family, std::vector<Index> interior)
    : family_(family.begin(), family.end()), interior_(std::move(interior))
{
    if (interior_.empty())
        throw std::invalid_argument("solve_in_span: empty interior");
    std::sort(interior_.begin(), interior_.end());
    interior_.erase(std::unique(interior_.begin(), interior_.end()), interior_.end());
    for (const auto& op : family_) {
        require_same_basis(family_.front().tag(), op.tag(), "SpanSolver");
    }

    // Equation (row, col) -> member index -> value.
    std::map<std::pair<Index, Index>, Row> equations;
    for (std::size_t m = 0; m < family_.size(); ++m) {
        for (Index j : interior_) {
            auto it = family_[m].columns().find(j);
            if (it == family_[m].columns().end())
                continue;
            for (const auto& [i, v] : it->second.entries())
                equations[{i, j}].emplace(m, v);
        }
    }

    Echelon ech;
    std::vector<Element> chosen;
    std::vector<Row> chosen_rows;
    for (auto& [key, row] : equations) {
        if (ech.size() == family_.size())
            break;
        if (ech.insert(row)) {
            chosen.push_back({key.first, key.second});
            chosen_rows.push_back(row);
        }
    }
    pivot_members_ = ech.leads();
    pivot_elements_ = std::move(chosen);
    system_.assign(pivot_elements_.size(), std::vector<GaussianRational>(pivot_members_.size()));
    for (std::size_t e = 0; e < chosen_rows.size(); ++e) {
        for (std::size_t m = 0; m < pivot_members_.size(); ++m) {
            auto it = chosen_rows[e].find(pivot_members_[m]);
            if (it != chosen_rows[e].end())
                system_[e][m] = it->second;
        }
    }
}

std::optional<std::vector<GaussianRational>> SpanSolver::solve(const SparseOp& target) const
{
    if (!family_.empty())
        require_same_basis(family_.front().tag(), target.tag(), "SpanSolver::solve");
    std::vector<GaussianRational> coeffs(family_.size());
    if (!pivot_members_.empty()) {
        std::vector<GaussianRational> rhs;
        rhs.reserve(pivot_elements_.size());
        for (const auto& e : pivot_elements_)
            rhs.push_back(target.at(e.row, e.col));
        auto x = solve_square(system_, std::move(rhs));
        for (std::size_t m = 0; m < pivot_members_.size(); ++m)
            coeffs[pivot_members_[m]] = x[m];
    }

    for (Index j : interior_) {
        SparseVec combo(target.tag());
        for (std::size_t m = 0; m < family_.size(); ++m) {
            if (coeffs[m].is_zero())
                continue;
            auto it = family_[m].columns().find(j);
            if (it != family_[m].columns().end())
                combo.axpy(coeffs[m], it->second);
        }
        if (!(combo == target.column(j)))
            return std::nullopt;
    }
    return coeffs;
}

std::optional<std::vector<GaussianRational>> solve_in_span(const SparseOp& target, std::span<const SparseOp> family,
                                                           const std::vector<Index>& interior)
{
    return SpanSolver(family, interior).solve(target);
}

}  // namespace parafock
