#ifndef PARAFOCK_EXACTALG_LINEAR_HPP
#define PARAFOCK_EXACTALG_LINEAR_HPP

#include "parafock/exactalg/sparse.hpp"

#include <optional>
#include <span>
#include <vector>

namespace parafock {

/// Exact rank of a family of vectors over Q(i).
std::size_t rank(std::span<const SparseVec> vectors);

/// Returns c with v == c * u, or nullopt when v is not a multiple of u.
/// u must be nonzero.
std::optional<GaussianRational> proportionality(const SparseVec& v, const SparseVec& u);

/// Expresses operators as exact combinations of a fixed family, comparing
/// only the columns in `interior`.
///
/// The family is factored once: an independent set of equations (matrix
/// elements) is picked so that the family restricted to those equations and
/// its pivot members is square and invertible. Each target is then solved on
/// that square system and the candidate is checked on every interior element,
/// so the answer is exact, not a least-squares fit. Members outside the pivot
/// set (dependent on the others) always get coefficient zero.
class SpanSolver {
public:
    SpanSolver(std::span<const SparseOp> family, std::vector<Index> interior);

    std::size_t rank() const { return pivot_members_.size(); }
    std::size_t family_size() const { return family_.size(); }
    const std::vector<Index>& interior() const { return interior_; }

    /// Coefficients c with target == sum c_k family_k on the interior, or
    /// nullopt when the target is not in the span there.
    std::optional<std::vector<GaussianRational>> solve(const SparseOp& target) const;

private:
    struct Element {
        Index row;
        Index col;
    };

    std::vector<SparseOp> family_;
    std::vector<Index> interior_;
    std::vector<std::size_t> pivot_members_;
    std::vector<Element> pivot_elements_;
    // Square system: system_[e][m] is family_[pivot_members_[m]] at pivot_elements_[e].
    std::vector<std::vector<GaussianRational>> system_;
};

/// One-shot form of SpanSolver. Throws std::invalid_argument on an empty
/// interior or a basis mismatch.
std::optional<std::vector<GaussianRational>> solve_in_span(const SparseOp& target, std::span<const SparseOp> family,
                                                           const std::vector<Index>& interior);

/// Solves the square system A x = b exactly by Gauss-Jordan elimination.
/// Throws std::domain_error if A is singular.
std::vector<GaussianRational> solve_square(std::vector<std::vector<GaussianRational>> a,
                                           std::vector<GaussianRational> b);

}  // namespace parafock

#endif
