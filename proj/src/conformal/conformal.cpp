#include "parafock/conformal.hpp"

#include "parafock/exactalg/linear.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace parafock::conformal {

namespace {

using fock::ParaboseAlgebra;

// Runs body(k) for k in [0, count) on up to `threads` workers. Each k is
// handled by exactly one worker; outputs must be written to slot k only.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body body)
{
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t k = 0; k < count; ++k)
            body(k);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t k = t; k < count; k += threads)
                body(k);
        });
    }
    for (auto& th : pool)
        th.join();
}

std::string pair_name(Gen a, Gen b)
{
    return "[" + std::string(name(a)) + "," + std::string(name(b)) + "]";
}

}  // namespace

std::string_view name(Gen g)
{
    return generator_names[static_cast<std::size_t>(g)];
}

std::optional<Gen> parse_generator(std::string_view n)
{
    for (std::size_t k = 0; k < generator_count; ++k) {
        if (generator_names[k] == n)
            return static_cast<Gen>(k);
    }
    return std::nullopt;
}

GeneratorSet build_generators(std::shared_ptr<const ParaboseAlgebra> alg)
{
    if (!alg)
        throw std::invalid_argument("build_generators: null algebra");
    if (alg->sorts() != 4)
        throw std::invalid_argument("the conformal generators need R = 4 (urs and anti-urs), got R = " +
                                    std::to_string(alg->sorts()));
    const ParaboseAlgebra& A = *alg;
    const GR half = GR::rational(1, 2);
    const GR ihalf = GR::i() * half;
    const int p = A.order();

    auto n = [&](int r) -> const SparseOp& { return A.number(r); };
    auto tau = [&](int r, int s) -> const SparseOp& { return A.tau(r, s); };
    auto al = [&](int r, int s) -> const SparseOp& { return A.alpha(r, s); };
    auto ald = [&](int r, int s) -> const SparseOp& { return A.alpha_dag(r, s); };

    GeneratorSet g;
    g.alg_ = alg;
    auto set = [&](Gen which, SparseOp op, std::set<int> shifts) {
        SparseOp declared(op.tag(), std::move(shifts));
        declared += op;
        g.gens_[static_cast<std::size_t>(which)] = std::move(declared);
    };

    set(Gen::M12, ihalf * (n(1) - n(2) + n(3) - n(4)), {0});
    set(Gen::M13, half * (tau(2, 1) - tau(1, 2) - tau(3, 4) + tau(4, 3)), {0});
    set(Gen::M23, ihalf * (tau(1, 2) + tau(2, 1) + tau(3, 4) + tau(4, 3)), {0});
    set(Gen::M15, ihalf * (tau(1, 2) + tau(2, 1) - tau(3, 4) - tau(4, 3)), {0});
    set(Gen::M25, half * (tau(1, 2) - tau(2, 1) - tau(3, 4) + tau(4, 3)), {0});
    set(Gen::M35, ihalf * (n(1) - n(2) - n(3) + n(4)), {0});
    set(Gen::M46, ihalf * (A.number() + GR(2 * p) * A.identity()), {0});

    set(Gen::N14, ihalf * (al(1, 3) + ald(1, 3) - al(2, 4) - ald(2, 4)), {-2, 2});
    set(Gen::N24, half * (ald(1, 3) - al(1, 3) - al(2, 4) + ald(2, 4)), {-2, 2});
    set(Gen::N34, ihalf * (GR(-1) * al(1, 4) - ald(1, 4) - al(2, 3) - ald(2, 3)), {-2, 2});
    set(Gen::N16, half * (ald(1, 3) - al(1, 3) + al(2, 4) - ald(2, 4)), {-2, 2});
    set(Gen::N26, ihalf * (GR(-1) * al(1, 3) - ald(1, 3) - al(2, 4) - ald(2, 4)), {-2, 2});
    set(Gen::N36, half * (al(1, 4) - ald(1, 4) + al(2, 3) - ald(2, 3)), {-2, 2});
    set(Gen::N45, half * (al(1, 4) - ald(1, 4) - al(2, 3) + ald(2, 3)), {-2, 2});
    set(Gen::N56, ihalf * (al(1, 4) + ald(1, 4) - al(2, 3) - ald(2, 3)), {-2, 2});
    return g;
}

std::vector<NamedOp> PoincareSet::named() const
{
    return {{"M12", M12}, {"M13", M13}, {"M23", M23}, {"N14", N14}, {"N24", N24},
            {"N34", N34}, {"P1", P1},   {"P2", P2},   {"P3", P3},   {"P0", P0}};
}

PoincareSet build_poincare(const GeneratorSet& g)
{
    PoincareSet ps;
    ps.M12 = g[Gen::M12];
    ps.M13 = g[Gen::M13];
    ps.M23 = g[Gen::M23];
    ps.N14 = g[Gen::N14];
    ps.N24 = g[Gen::N24];
    ps.N34 = g[Gen::N34];
    ps.P1 = g[Gen::M15] + g[Gen::N16];
    ps.P2 = g[Gen::M25] + g[Gen::N26];
    ps.P3 = g[Gen::M35] + g[Gen::N36];
    ps.P0 = g[Gen::N45] + g[Gen::M46];
    return ps;
}

std::string_view closure_column_name(std::size_t k)
{
    return k < generator_count ? generator_names.at(k) : std::string_view("I");
}

namespace {

std::vector<SparseOp> closure_family(const GeneratorSet& g)
{
    std::vector<SparseOp> family(g.all().begin(), g.all().end());
    family.push_back(g.algebra().identity());
    return family;
}

}  // namespace

std::optional<std::vector<GR>> commutator_coefficients(const GeneratorSet& g, Gen a, Gen b, int depth)
{
    const auto cols = g.basis().interior(depth);
    const auto family = closure_family(g);
    SpanSolver solver(family, cols);
    return solver.solve(commutator_on(g[a], g[b], cols));
}

ClosureTable closure_table(const GeneratorSet& g, int depth, unsigned threads)
{
    if (depth < 4)
        throw std::invalid_argument("closure_table: depth must be >= 4, got " + std::to_string(depth));
    const auto cols = g.basis().interior(depth);
    const auto family = closure_family(g);
    const SpanSolver solver(family, cols);

    ClosureTable table;
    table.config = g.basis().config();
    table.depth = depth;
    table.family_rank = solver.rank();
    for (std::size_t x = 0; x < generator_count; ++x)
        for (std::size_t y = x + 1; y < generator_count; ++y)
            table.rows.push_back({static_cast<Gen>(x), static_cast<Gen>(y), std::nullopt});

    parallel_for(table.rows.size(), threads, [&](std::size_t k) {
        auto& row = table.rows[k];
        row.coefficients = solver.solve(commutator_on(g[row.a], g[row.b], cols));
    });
    return table;
}

bool ClosureTable::closed() const
{
    return std::all_of(rows.begin(), rows.end(), [](const ClosureRow& r) { return r.coefficients.has_value(); });
}

std::vector<std::string> ClosureTable::failures() const
{
    std::vector<std::string> out;
    for (const auto& r : rows) {
        if (!r.coefficients)
            out.push_back(pair_name(r.a, r.b));
    }
    return out;
}

std::string format_expansion(const std::optional<std::vector<GR>>& coefficients)
{
    if (!coefficients)
        return "NOT_IN_SPAN";
    std::string out;
    for (std::size_t k = 0; k < coefficients->size(); ++k) {
        const GR& c = (*coefficients)[k];
        if (c.is_zero())
            continue;
        const std::string label(closure_column_name(k));
        std::string term;
        bool negative = false;
        if (c == GR(1)) {
            term = label;
        } else if (c == GR(-1)) {
            term = label;
            negative = true;
        } else if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            term = mpq_class(abs(c.re())).get_str() + "*" + label;
        } else {
            term = "(" + c.to_string() + ")*" + label;
        }
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

std::string ClosureTable::to_text() const
{
    std::ostringstream os;
    os << "closure R=" << config.sorts << " p=" << config.order << " nmax=" << config.max_urs << " depth=" << depth
       << " family_rank=" << family_rank << "\n";
    for (const auto& r : rows)
        os << pair_name(r.a, r.b) << " = " << format_expansion(r.coefficients) << "\n";
    return os.str();
}

Report jacobi_check(const GeneratorSet& g, int depth, TripleSelection triples, unsigned threads)
{
    if (depth < 6)
        throw std::invalid_argument("jacobi_check: depth must be >= 6, got " + std::to_string(depth));
    const auto& basis = g.basis();
    const auto cols = basis.interior(depth);
    if (cols.empty())
        throw std::invalid_argument("jacobi_check: interior(" + std::to_string(depth) + ") is empty");
    // Brackets are needed on every vector one generator can reach from the
    // interior, i.e. on interior(depth - 2); they are exact there.
    const auto inner = basis.interior(depth - 2);

    std::vector<std::array<std::size_t, 3>> selected;
    std::size_t ordinal = 0;
    for (std::size_t x = 0; x < generator_count; ++x)
        for (std::size_t y = x + 1; y < generator_count; ++y)
            for (std::size_t z = y + 1; z < generator_count; ++z, ++ordinal)
                if (triples == TripleSelection::all || ordinal % 13 == 0)
                    selected.push_back({x, y, z});

    // bracket[x][y] for x < y
    std::vector<std::vector<SparseOp>> bracket(generator_count, std::vector<SparseOp>(generator_count));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < generator_count; ++x)
        for (std::size_t y = x + 1; y < generator_count; ++y)
            pairs.emplace_back(x, y);
    parallel_for(pairs.size(), threads, [&](std::size_t k) {
        auto [x, y] = pairs[k];
        bracket[x][y] = commutator_on(g.at(x), g.at(y), inner);
    });
    auto apply_bracket = [&](std::size_t x, std::size_t y, const SparseVec& v) {
        if (x < y)
            return op_apply(bracket[x][y], v);
        SparseVec w = op_apply(bracket[y][x], v);
        w *= GR(-1);
        return w;
    };
    // [[X,Y],Z] v = [X,Y](Z v) - Z([X,Y] v)
    auto nested = [&](std::size_t x, std::size_t y, std::size_t z, const SparseVec& v) {
        SparseVec out = apply_bracket(x, y, op_apply(g.at(z), v));
        out -= op_apply(g.at(z), apply_bracket(x, y, v));
        return out;
    };

    std::vector<CheckRecord> records(selected.size());
    parallel_for(selected.size(), threads, [&](std::size_t k) {
        auto [x, y, z] = selected[k];
        bool ok = true;
        std::string detail;
        for (Index c : cols) {
            SparseVec e = SparseVec::unit(basis.tag(), c);
            SparseVec sum = nested(x, y, z, e);
            sum += nested(y, z, x, e);
            sum += nested(z, x, y, e);
            if (!sum.empty()) {
                ok = false;
                detail = "nonzero at column " + basis.label(c);
                break;
            }
        }
        records[k] = {"(" + std::string(generator_names[x]) + "," + std::string(generator_names[y]) + "," +
                          std::string(generator_names[z]) + ")",
                      ok, detail};
    });

    Report report;
    report.name = "jacobi(R=4,p=" + std::to_string(basis.config().order) +
                  ",nmax=" + std::to_string(basis.config().max_urs) + ",depth=" + std::to_string(depth) + ")";
    report.checks = std::move(records);
    return report;
}

}  // namespace parafock::conformal
