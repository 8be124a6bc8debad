#ifndef PARAFOCK_CONFORMAL_HPP
#define PARAFOCK_CONFORMAL_HPP

#include "parafock/fock.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace parafock::conformal {

using GR = GaussianRational;

enum class Gen : int { M12, M13, M23, M15, M25, M35, M46, N14, N24, N34, N16, N26, N36, N45, N56 };

inline constexpr std::size_t generator_count = 15;

inline constexpr std::array<std::string_view, generator_count> generator_names{
    "M12", "M13", "M23", "M15", "M25", "M35", "M46", "N14", "N24", "N34", "N16", "N26", "N36", "N45", "N56"};

std::string_view name(Gen g);
std::optional<Gen> parse_generator(std::string_view name);

/// The 15 SU(2,2) generators realized as parabose bilinears on an R = 4 basis.
class GeneratorSet {
public:
    const fock::ParaboseAlgebra& algebra() const { return *alg_; }
    const fock::FockBasis& basis() const { return alg_->basis(); }
    const SparseOp& operator[](Gen g) const { return gens_[static_cast<std::size_t>(g)]; }
    const SparseOp& at(std::size_t k) const { return gens_.at(k); }
    const std::array<SparseOp, generator_count>& all() const { return gens_; }

private:
    friend GeneratorSet build_generators(std::shared_ptr<const fock::ParaboseAlgebra> alg);
    std::shared_ptr<const fock::ParaboseAlgebra> alg_;
    std::array<SparseOp, generator_count> gens_;
};

/// Throws std::invalid_argument unless the basis has R = 4.
GeneratorSet build_generators(std::shared_ptr<const fock::ParaboseAlgebra> alg);

struct NamedOp {
    std::string name;
    SparseOp op;
};

/// Rotations M_ik, boosts N_i4, momenta P_i = M_i5 + N_i6, energy P_0 = N_45 + M_46.
struct PoincareSet {
    SparseOp M12, M13, M23;
    SparseOp N14, N24, N34;
    SparseOp P1, P2, P3;
    SparseOp P0;

    /// The ten operators in the order rotations, boosts, momenta, energy.
    std::vector<NamedOp> named() const;
};

PoincareSet build_poincare(const GeneratorSet& g);

/// Expansion of [G_a, G_b] over the 15 generators plus the identity (index 15).
struct ClosureRow {
    Gen a;
    Gen b;
    std::optional<std::vector<GR>> coefficients;
};

struct ClosureTable {
    fock::ModeConfig config;
    int depth = 4;
    std::size_t family_rank = 0;
    std::vector<ClosureRow> rows;

    bool closed() const;
    std::vector<std::string> failures() const;
    /// Deterministic text: one line per pair, "[A,B] = c1*G1 + ... ".
    std::string to_text() const;
};

/// Column labels of a closure row: the generator names, then "I".
std::string_view closure_column_name(std::size_t k);

/// Solves [G_a, G_b] in span(15 generators, identity) on interior(depth).
std::optional<std::vector<GR>> commutator_coefficients(const GeneratorSet& g, Gen a, Gen b, int depth = 4);

/// All 105 unordered pairs a < b. Throws std::invalid_argument if depth < 4.
/// `threads` > 1 splits the pairs across worker threads; the result does not
/// depend on it.
ClosureTable closure_table(const GeneratorSet& g, int depth = 4, unsigned threads = 1);

/// "[M12,M23] = M13"; "0" for an all-zero row; "NOT_IN_SPAN" when unsolved.
std::string format_expansion(const std::optional<std::vector<GR>>& coefficients);

enum class TripleSelection { all, sample };

/// [[A,B],C] + [[B,C],A] + [[C,A],B] == 0 on interior(depth) for every triple
/// of distinct generators (sample: a fixed deterministic subset of 35).
/// Throws std::invalid_argument if depth < 6.
Report jacobi_check(const GeneratorSet& g, int depth = 6, TripleSelection triples = TripleSelection::all,
                    unsigned threads = 1);

}  // namespace parafock::conformal

#endif
