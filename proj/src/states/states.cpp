#include "parafock/states.hpp"

#include "parafock/exactalg/linear.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace parafock::states {

namespace {

mpq_class factorial(int n)
{
    mpz_class f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return mpq_class(f);
}

GR i_power(int k)
{
    static const GR cycle[4] = {GR(1), GR::i(), GR(-1), -GR::i()};
    return cycle[((k % 4) + 4) % 4];
}

void require_same(const fock::ParaboseAlgebra& alg, const TruncatedSeriesState& s, const char* what)
{
    if (!s.basis || s.basis->tag() != alg.tag())
        throw BasisMismatch(std::string(what) + ": state and algebra live on different bases");
}

ConditionResidual make_residual(const fock::FockBasis& basis, std::string condition, SparseVec residual,
                                int checked_through)
{
    ConditionResidual out;
    out.condition = std::move(condition);
    std::map<int, std::size_t> counts;
    for (const auto& [i, v] : residual.entries())
        ++counts[basis.shell(i)];
    for (const auto& [n, c] : counts)
        out.shells.push_back({n, c});
    out.interior_clean = counts.empty() || counts.begin()->first > checked_through;
    out.residual = std::move(residual);
    return out;
}

bool clean_on(const fock::FockBasis& basis, const SparseVec& v, int checked_through)
{
    return std::all_of(v.entries().begin(), v.entries().end(),
                       [&](const auto& e) { return basis.shell(e.first) > checked_through; });
}

int checked_shells(const TruncatedSeriesState& state, int boundary_width)
{
    if (boundary_width < 0)
        throw std::invalid_argument("boundary width must be >= 0");
    const int through = state.exact_through - boundary_width;
    if (through < 0)
        throw std::invalid_argument("no interior shell: exact through " + std::to_string(state.exact_through) +
                                    " with boundary width " + std::to_string(boundary_width));
    return through;
}

}  // namespace

std::string_view kind_name(StateKind k)
{
    switch (k) {
    case StateKind::exact:
        return "exact";
    case StateKind::vacuum:
        return "vacuum";
    case StateKind::zeron:
        return "zeron";
    case StateKind::neutrino:
        return "neutrino";
    }
    return "?";
}

std::string_view verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::annihilates:
        return "annihilates";
    case Verdict::proportional:
        return "proportional";
    case Verdict::eigenvalue:
        return "eigenvalue";
    case Verdict::violated:
        return "violated";
    }
    return "?";
}

std::set<int> TruncatedSeriesState::shell_support() const
{
    std::set<int> out;
    for (const auto& [i, v] : vector.entries())
        out.insert(basis->shell(i));
    return out;
}

GR lorentz_vacuum_coefficient(int mu, int lambda)
{
    GR c = i_power(mu - lambda);
    if ((mu + lambda) % 2)
        c = -c;
    return c * GR(mpq_class(1) / (factorial(mu) * factorial(lambda)));
}

TruncatedSeriesState lorentz_vacuum(const fock::ParaboseAlgebra& alg, int K)
{
    const auto& cfg = alg.basis().config();
    if (cfg.sorts != 4)
        throw std::invalid_argument("the Lorentz vacuum needs R = 4, got R = " + std::to_string(cfg.sorts));
    if (K < 0)
        throw std::invalid_argument("series cutoff K must be >= 0");
    if (2 * K > cfg.max_urs)
        throw std::invalid_argument("2K = " + std::to_string(2 * K) + " exceeds n_max = " + std::to_string(cfg.max_urs));

    const SparseOp& a14 = alg.alpha_dag(1, 4);
    const SparseOp& a23 = alg.alpha_dag(2, 3);
    SparseVec sum(alg.tag());
    SparseVec row = alg.vacuum();  // (alpha+_14)^mu |Omega>
    for (int mu = 0; mu <= K; ++mu) {
        SparseVec term = row;  // (alpha+_23)^lambda (alpha+_14)^mu |Omega>
        for (int lambda = 0; mu + lambda <= K; ++lambda) {
            sum.axpy(lorentz_vacuum_coefficient(mu, lambda), term);
            term = op_apply(a23, term);
        }
        row = op_apply(a14, row);
    }

    TruncatedSeriesState s;
    s.kind = StateKind::vacuum;
    s.basis = alg.shared_basis();
    s.vector = std::move(sum);
    s.series_cutoff = K;
    s.exact_through = 2 * K;
    return s;
}

std::optional<GR> vacuum_term_coefficient(const fock::ParaboseAlgebra& alg, const TruncatedSeriesState& omega,
                                          int mu, int lambda)
{
    require_same(alg, omega, "vacuum_term_coefficient");
    SparseVec term = alg.vacuum();
    for (int k = 0; k < mu; ++k)
        term = op_apply(alg.alpha_dag(1, 4), term);
    for (int k = 0; k < lambda; ++k)
        term = op_apply(alg.alpha_dag(2, 3), term);
    if (term.empty())
        throw std::invalid_argument("series term (" + std::to_string(mu) + "," + std::to_string(lambda) +
                                    ") is truncated away");
    const auto& basis = alg.basis();
    const int want[4] = {mu, lambda, lambda, mu};
    auto on_sector = [&](Index i) {
        for (int r = 1; r <= 4; ++r) {
            if (basis.sort_occupation(i, r) != want[r - 1])
                return false;
        }
        return true;
    };
    SparseVec part = omega.vector.filtered(on_sector);
    if (part.empty())
        return GR(0);
    return proportionality(part, term);
}

TruncatedSeriesState zeron(const fock::ParaboseAlgebra& alg, const TruncatedSeriesState& omega,
                           const mpq_class& epsilon, int Kprime)
{
    require_same(alg, omega, "zeron");
    const auto& cfg = alg.basis().config();
    if (cfg.order != 1)
        throw std::invalid_argument("the zeron is defined for p = 1, got p = " + std::to_string(cfg.order));
    if (omega.kind != StateKind::vacuum)
        throw std::invalid_argument("zeron: the base state must be a Lorentz vacuum");
    if (Kprime < 0)
        throw std::invalid_argument("series cutoff K' must be >= 0");
    const int top = 2 * (omega.series_cutoff + Kprime);
    if (top > cfg.max_urs)
        throw std::invalid_argument("2(K + K') = " + std::to_string(top) + " exceeds n_max = " +
                                    std::to_string(cfg.max_urs));

    const GR ieps = GR::i() * GR(epsilon);
    SparseVec sum(alg.tag());
    SparseVec term = omega.vector;  // (alpha+_14)^mu |omega>
    for (int mu = 0; mu <= Kprime; ++mu) {
        const mpq_class f = factorial(mu);
        sum.axpy(pow(ieps, static_cast<unsigned>(mu)) * GR(mpq_class(1) / (f * f)), term);
        term = op_apply(alg.alpha_dag(1, 4), term);
    }

    TruncatedSeriesState s;
    s.kind = StateKind::zeron;
    s.basis = alg.shared_basis();
    s.vector = std::move(sum);
    s.series_cutoff = omega.series_cutoff;
    s.series_cutoff_prime = Kprime;
    // Shell 2m holds every product term only while m <= min(K, K'); with
    // eps = 0 the zeron is the vacuum itself.
    s.exact_through = sgn(epsilon) == 0 ? omega.exact_through : 2 * std::min(omega.series_cutoff, Kprime);
    s.epsilon = epsilon;
    return s;
}

TruncatedSeriesState neutrino(const fock::ParaboseAlgebra& alg, const TruncatedSeriesState& zeron_state)
{
    require_same(alg, zeron_state, "neutrino");
    if (zeron_state.kind != StateKind::zeron)
        throw std::invalid_argument("neutrino: the base state must be a zeron");
    TruncatedSeriesState s = zeron_state;
    s.kind = StateKind::neutrino;
    s.vector = op_apply(alg.a(1), zeron_state.vector);
    s.exact_through = zeron_state.exact_through - 1;
    return s;
}

TruncatedSeriesState exact_state(const fock::ParaboseAlgebra& alg, SparseVec v)
{
    require_same_basis(alg.tag(), v.tag(), "exact_state");
    TruncatedSeriesState s;
    s.kind = StateKind::exact;
    s.basis = alg.shared_basis();
    s.vector = std::move(v);
    s.exact_through = alg.basis().config().max_urs;
    return s;
}

bool ResidualReport::interior_clean() const
{
    return std::all_of(conditions.begin(), conditions.end(), [](const ConditionResidual& c) { return c.interior_clean; });
}

ResidualReport check_vacuum_invariance(const TruncatedSeriesState& state, const conformal::PoincareSet& ops,
                                       int boundary_width)
{
    const int through = checked_shells(state, boundary_width);
    const auto& basis = *state.basis;
    ResidualReport report;
    report.kind = state.kind;
    report.exact_through = state.exact_through;
    report.boundary_width = boundary_width;
    report.checked_through = through;

    // Ray invariance reads c off the lowest shell carrying the state.
    std::optional<Index> anchor;
    for (const auto& [i, v] : state.vector.entries()) {
        if (!anchor || basis.shell(i) < basis.shell(*anchor))
            anchor = i;
    }

    for (const auto& [name, op] : ops.named()) {
        SparseVec image = op_apply(op, state.vector);
        if (clean_on(basis, image, through)) {
            auto r = make_residual(basis, name + " psi = 0", std::move(image), through);
            r.verdict = Verdict::annihilates;
            report.conditions.push_back(std::move(r));
            continue;
        }
        std::optional<GR> c;
        if (anchor)
            c = image.at(*anchor) / state.vector.at(*anchor);
        SparseVec residual = image;
        if (c)
            residual.axpy(-*c, state.vector);
        auto r = make_residual(basis, name + " psi = c psi", std::move(residual), through);
        r.recorded_constant = c;
        r.verdict = r.interior_clean ? Verdict::proportional : Verdict::violated;
        report.conditions.push_back(std::move(r));
    }
    return report;
}

ResidualReport check_particle_conditions(const TruncatedSeriesState& state, const conformal::PoincareSet& ops,
                                         int boundary_width)
{
    if (!state.epsilon)
        throw std::invalid_argument("particle conditions need a state with epsilon");
    const int through = checked_shells(state, boundary_width);
    const auto& basis = *state.basis;
    const SparseVec& psi = state.vector;
    const GR ieps = GR::i() * GR(*state.epsilon);
    const GR half_ieps = ieps * GR::rational(1, 2);

    ResidualReport report;
    report.kind = state.kind;
    report.exact_through = state.exact_through;
    report.boundary_width = boundary_width;
    report.checked_through = through;

    auto add = [&](std::string condition, SparseVec image, std::optional<GR> eigen) {
        if (eigen)
            image.axpy(-*eigen, psi);
        auto r = make_residual(basis, std::move(condition), std::move(image), through);
        r.recorded_constant = eigen;
        if (!r.interior_clean)
            r.verdict = Verdict::violated;
        else
            r.verdict = eigen ? Verdict::eigenvalue : Verdict::annihilates;
        report.conditions.push_back(std::move(r));
    };

    const SparseVec p0 = op_apply(ops.P0, psi);
    const SparseVec p3 = op_apply(ops.P3, psi);
    add("P1 psi = 0", op_apply(ops.P1, psi), std::nullopt);
    add("P2 psi = 0", op_apply(ops.P2, psi), std::nullopt);
    add("(P0 - P3) psi = 0", p0 - p3, std::nullopt);
    add("(P0 + P3) psi = i eps psi", p0 + p3, ieps);
    add("P0 psi = (i eps / 2) psi", p0, half_ieps);
    add("P3 psi = (i eps / 2) psi", p3, half_ieps);
    return report;
}

ResidualReport check_invariance(const TruncatedSeriesState& state, const conformal::PoincareSet& ops,
                                int boundary_width)
{
    if (state.kind == StateKind::zeron || state.kind == StateKind::neutrino)
        return check_particle_conditions(state, ops, boundary_width);
    return check_vacuum_invariance(state, ops, boundary_width);
}

}  // namespace parafock::states
