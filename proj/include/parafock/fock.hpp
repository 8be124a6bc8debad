#ifndef PARAFOCK_FOCK_HPP
#define PARAFOCK_FOCK_HPP

#include "parafock/exactalg/sparse.hpp"
#include "parafock/report.hpp"
#include "parafock/word.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace parafock::fock {

using GR = GaussianRational;

/// R ur sorts, parabose order p, and the total ur-number cutoff n_max.
struct ModeConfig {
    int sorts = 2;
    int order = 1;
    int max_urs = 1;

    /// Throws std::invalid_argument on sorts < 1, order < 1 or max_urs < 1.
    void validate() const;
    /// R = 2 (urs) or R = 4 (urs and anti-urs); other sort counts are accepted
    /// but flagged by callers.
    bool standard_sort_count() const { return sorts == 2 || sorts == 4; }
    int modes() const { return sorts * order; }

    friend bool operator==(const ModeConfig&, const ModeConfig&) = default;
};

/// Occupation numbers indexed by mode (r - 1) * p + (alpha - 1).
using OccVector = std::vector<int>;

/// Hard limit on basis size: PARAFOCK_MAX_BASIS if set, else 250000.
std::size_t max_basis_size();

/// sum_{n <= n_max} C(n + Rp - 1, Rp - 1), saturating at SIZE_MAX.
std::size_t count_states(const ModeConfig& config);

class BasisTooLarge : public std::runtime_error {
public:
    BasisTooLarge(std::size_t size, std::size_t limit);
    std::size_t size() const { return size_; }

private:
    std::size_t size_;
};

/// Truncated Fock basis of all occupation vectors with total ur number
/// <= n_max, ordered by total ur number, then lexicographically.
class FockBasis {
public:
    explicit FockBasis(ModeConfig config, std::size_t limit = max_basis_size());

    const ModeConfig& config() const { return config_; }
    const BasisTag& tag() const { return tag_; }
    std::size_t size() const { return states_.size(); }

    const OccVector& state(Index i) const { return states_.at(i); }
    std::optional<Index> index_of(const OccVector& occ) const;
    int shell(Index i) const { return shells_.at(i); }
    std::span<const int> shells() const { return shells_; }

    /// Flat mode index of (r, alpha), both 1-based. Throws std::out_of_range.
    std::size_t mode(int r, int alpha) const;
    /// Total occupation of sort r summed over Green components.
    int sort_occupation(Index i, int r) const;

    /// Columns whose total ur number is <= n_max - depth.
    std::vector<Index> interior(int depth) const;
    std::vector<Index> shell_indices(int n) const;

    /// "(o11,o12|o21,o22|...)": sorts separated by '|', components by ','.
    std::string label(Index i) const;

private:
    ModeConfig config_;
    BasisTag tag_;
    std::vector<OccVector> states_;
    std::vector<int> shells_;
    std::map<OccVector, Index> index_;
};

std::shared_ptr<const FockBasis> build_basis(const ModeConfig& config);

enum class Ladder { create, annihilate };

/// Green component b_r^(alpha) or b_r^(alpha)+.
///
/// Matrix elements use the dual-pairing normalization b+|m> = (m+1)|m+1>,
/// b|m> = |m-1>, which keeps every entry an integer and still gives
/// [b, b+] = 1. Components of different alpha anticommute through the Klein
/// factor prod_{beta < alpha} (-1)^{N_beta}, N_beta the occupation summed over
/// sorts in component beta.
SparseOp green_op(const FockBasis& basis, int r, int alpha, Ladder kind);

enum class BilinearKind { alpha, alpha_dag, tau };

/// Parabose ladder operators and their bilinears on one truncated basis.
/// Everything is built eagerly; instances are immutable afterwards.
class ParaboseAlgebra {
public:
    explicit ParaboseAlgebra(std::shared_ptr<const FockBasis> basis);
    explicit ParaboseAlgebra(const ModeConfig& config) : ParaboseAlgebra(build_basis(config)) {}

    const FockBasis& basis() const { return *basis_; }
    const std::shared_ptr<const FockBasis>& shared_basis() const { return basis_; }
    const BasisTag& tag() const { return basis_->tag(); }
    int sorts() const { return basis_->config().sorts; }
    int order() const { return basis_->config().order; }

    const SparseOp& b(int r, int alpha, Ladder kind) const;
    /// a_r = sum_alpha b_r^(alpha)
    const SparseOp& a(int r) const;
    const SparseOp& a_dag(int r) const;

    /// alpha_rs = {a_r, a_s}/2, alpha+_rs = {a_r+, a_s+}/2, tau_rs = {a_r+, a_s}/2
    const SparseOp& bilinear(BilinearKind kind, int r, int s) const;
    const SparseOp& alpha(int r, int s) const { return bilinear(BilinearKind::alpha, r, s); }
    const SparseOp& alpha_dag(int r, int s) const { return bilinear(BilinearKind::alpha_dag, r, s); }
    const SparseOp& tau(int r, int s) const { return bilinear(BilinearKind::tau, r, s); }

    /// n_r = tau_rr - p/2
    const SparseOp& number(int r) const;
    /// n = sum_r n_r
    const SparseOp& number() const { return total_number_; }
    const SparseOp& identity() const { return identity_; }

    SparseVec vacuum() const;
    /// a+_{r1} ... a+_{rn} |Omega>. Throws std::invalid_argument if the word is
    /// longer than n_max or uses an unknown sort.
    SparseVec monomial_state(const Word& w) const;
    /// sum_w c_w a+_{w}|Omega>
    SparseVec monomial_image(const std::map<Word, GR>& terms) const;

private:
    void check_sort(int r) const;
    std::size_t pair_slot(int r, int s) const;

    std::shared_ptr<const FockBasis> basis_;
    std::vector<SparseOp> b_annihilate_;
    std::vector<SparseOp> b_create_;
    std::vector<SparseOp> a_;
    std::vector<SparseOp> a_dag_;
    std::vector<SparseOp> alpha_;
    std::vector<SparseOp> alpha_dag_;
    std::vector<SparseOp> tau_;
    std::vector<SparseOp> number_;
    SparseOp total_number_;
    SparseOp identity_;
};

struct ParaOps {
    std::vector<SparseOp> a;
    std::vector<SparseOp> a_dag;
};
ParaOps para_ops(const ParaboseAlgebra& alg);

SparseOp bilinear(const ParaboseAlgebra& alg, BilinearKind kind, int r, int s);

struct NumberOps {
    std::vector<SparseOp> per_sort;
    SparseOp total;
};
NumberOps number_ops(const ParaboseAlgebra& alg);

SparseVec monomial_state(const ParaboseAlgebra& alg, const Word& w);

/// Checks the trilinear relations [a_r, tau_st] = delta_rs a_t,
/// [a_r, alpha_st] = [a_r+, alpha+_st] = 0, the same-component commutators and
/// cross-component anticommutators of the Green bosons, and the vacuum
/// conditions, each as exact operator equality on interior(depth).
Report verify_green_relations(const ParaboseAlgebra& alg, int depth = 4);

/// Rank of { a+_{w}|Omega> : w a distinct arrangement of `content` }.
std::size_t physical_span(const ParaboseAlgebra& alg, std::vector<int> content);

/// (1/8)(a1+ a2+ a1+ - (a1+ a1+ a2+ + a2+ a1+ a1+)/2)|Omega>, built from
/// operator products rather than monomial states.
SparseVec psi121_from_creators(const ParaboseAlgebra& alg);

}  // namespace parafock::fock

#endif
