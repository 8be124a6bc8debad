#ifndef PARAFOCK_STATES_HPP
#define PARAFOCK_STATES_HPP

#include "parafock/conformal.hpp"
#include "parafock/fock.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace parafock::states {

using GR = GaussianRational;

enum class StateKind { exact, vacuum, zeron, neutrino };

std::string_view kind_name(StateKind k);

/// A finite truncation of a power series over |Omega>.
///
/// `exact_through` is the highest shell on which the truncated vector agrees
/// with the untruncated series; components above it are incomplete.
struct TruncatedSeriesState {
    StateKind kind = StateKind::exact;
    std::shared_ptr<const fock::FockBasis> basis;
    SparseVec vector;
    int series_cutoff = 0;        // K
    int series_cutoff_prime = 0;  // K'
    int exact_through = 0;
    std::optional<mpq_class> epsilon;

    /// Total ur numbers carrying a nonzero amplitude.
    std::set<int> shell_support() const;
};

/// (-1)^(mu+lambda) i^(mu-lambda) / (mu! lambda!)
GR lorentz_vacuum_coefficient(int mu, int lambda);

/// sum_{mu+lambda<=K} c(mu,lambda) (alpha+_14)^mu (alpha+_23)^lambda |Omega>.
/// Throws std::invalid_argument unless R = 4, K >= 0 and 2K <= n_max.
TruncatedSeriesState lorentz_vacuum(const fock::ParaboseAlgebra& alg, int K);

/// The (mu, lambda) series terms of a Lorentz-vacuum state, read back off the
/// vector: each term lives on the sort occupation (mu, lambda, lambda, mu), so
/// the coefficient is the ratio against (alpha+_14)^mu (alpha+_23)^lambda |Omega>
/// on those components. nullopt when the components are not proportional.
std::optional<GR> vacuum_term_coefficient(const fock::ParaboseAlgebra& alg, const TruncatedSeriesState& omega,
                                          int mu, int lambda);

/// sum_{mu<=K'} (i eps)^mu / (mu!)^2 (alpha+_14)^mu |omega>.
/// Throws std::invalid_argument unless p = 1, omega is a Lorentz vacuum on the
/// same basis, K' >= 0 and 2(K + K') <= n_max.
TruncatedSeriesState zeron(const fock::ParaboseAlgebra& alg, const TruncatedSeriesState& omega,
                           const mpq_class& epsilon, int Kprime);

/// a_1 applied to a zeron, as written (a_1 is the annihilator).
TruncatedSeriesState neutrino(const fock::ParaboseAlgebra& alg, const TruncatedSeriesState& zeron_state);

/// Wraps an untruncated vector such as |Omega>; exact on every shell.
TruncatedSeriesState exact_state(const fock::ParaboseAlgebra& alg, SparseVec v);

struct ShellCount {
    int n = 0;
    std::size_t residual_component_count = 0;
};

enum class Verdict { annihilates, proportional, eigenvalue, violated };

std::string_view verdict_name(Verdict v);

struct ConditionResidual {
    std::string condition;
    /// Every shell of the residual with at least one nonzero component.
    std::vector<ShellCount> shells;
    bool interior_clean = false;
    Verdict verdict = Verdict::violated;
    /// The constant c in G psi = c psi, for proportional and eigenvalue checks.
    std::optional<GR> recorded_constant;
    SparseVec residual;
};

struct ResidualReport {
    StateKind kind = StateKind::exact;
    int exact_through = 0;
    int boundary_width = 0;
    /// Residuals must vanish on shells <= checked_through.
    int checked_through = 0;
    std::vector<ConditionResidual> conditions;

    bool interior_clean() const;
};

/// Each operator applied to the state must vanish on shells
/// <= exact_through - boundary_width. Operators that do not annihilate are
/// tried as ray invariance G psi = c psi with c read off the |Omega> component.
/// Throws std::invalid_argument if no shell is left to check.
ResidualReport check_vacuum_invariance(const TruncatedSeriesState& state, const conformal::PoincareSet& ops,
                                       int boundary_width);

/// P1 psi = 0, P2 psi = 0, (P0 - P3) psi = 0, (P0 + P3) psi = i eps psi, and
/// the implied P0 psi = P3 psi = (i eps / 2) psi, on shells
/// <= exact_through - boundary_width. Requires a stored epsilon.
ResidualReport check_particle_conditions(const TruncatedSeriesState& state, const conformal::PoincareSet& ops,
                                         int boundary_width);

/// Vacuum-type checks for exact and vacuum states, particle conditions for
/// zerons and neutrinos.
ResidualReport check_invariance(const TruncatedSeriesState& state, const conformal::PoincareSet& ops,
                                int boundary_width);

}  // namespace parafock::states

#endif
