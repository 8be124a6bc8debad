// Acceptance run: one PASS/FAIL line per criterion, with the failing records
// listed underneath. Exit status is nonzero if any criterion fails.
#include "equivalence.hpp"
#include "parafock/conformal.hpp"
#include "parafock/cosmo.hpp"
#include "parafock/exactalg/linear.hpp"
#include "parafock/fock.hpp"
#include "parafock/states.hpp"
#include "parafock/young.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

using parafock::Report;
using parafock::Word;
namespace fock = parafock::fock;
namespace young = parafock::young;
namespace conformal = parafock::conformal;
namespace states = parafock::states;
namespace cosmo = parafock::cosmo;
using GR = parafock::GaussianRational;

namespace {

// Wall-clock budgets in seconds.
constexpr double young_budget = 10;
constexpr double tensor_budget = 1;
constexpr double green_budget_per_config = 60;
constexpr double psi_budget = 10;
constexpr double closure_budget = 600;
constexpr double vacuum_budget = 300;
constexpr double particle_budget = 300;
constexpr double cosmo_budget = 1;
// Allowed |exponent difference| for the cosmology rows.
constexpr int cosmo_decades = 1;
// Interior margins.
constexpr int green_depth = 4;
constexpr int closure_depth = 4;
constexpr int jacobi_depth = 6;
constexpr int vacuum_boundary = 4;
constexpr int particle_boundary = 2;

unsigned worker_threads()
{
    const unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : h;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

struct Criterion {
    int number;
    std::string title;
    Report records;
    double seconds = 0;
};

bool report(const Criterion& c)
{
    const bool pass = c.records.passed();
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " ["
              << c.records.checks.size() - c.records.failures() << "/" << c.records.checks.size() << " checks, "
              << fmt_seconds(c.seconds) << "]\n";
    for (const auto& r : c.records.checks) {
        if (!r.pass)
            std::cout << "    failed: " << r.id << (r.detail.empty() ? "" : " -- " + r.detail) << "\n";
    }
    std::cout.flush();
    return pass;
}

void merge(Report& into, const Report& from, const std::string& prefix)
{
    for (const auto& c : from.checks)
        into.add(prefix + c.id, c.pass, c.detail);
}

void budget(Report& r, double spent, double limit)
{
    r.add("runtime within " + fmt_seconds(limit), spent <= limit, fmt_seconds(spent));
}

Criterion young_counting()
{
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c{1, "Young counting, sum f^2 = n! for n <= 8", {}};
    for (int n = 1; n <= 8; ++n)
        merge(c.records, young::verify_sum_squares(n), "n=" + std::to_string(n) + " ");
    std::vector<std::uint64_t> f;
    for (const auto& d : young::enumerate_diagrams(3))
        f.push_back(young::count_standard_tableaux(d));
    c.records.add("n=3 counts (1,2,1)", f == std::vector<std::uint64_t>{1, 2, 1});
    c.seconds = seconds_since(t0);
    budget(c.records, c.seconds, young_budget);
    return c;
}

young::FormalTensor tensor(std::initializer_list<std::pair<Word, long>> terms)
{
    young::FormalTensor::Terms t;
    for (const auto& [w, v] : terms)
        t[w] = GR(v);
    return young::FormalTensor(t);
}

Criterion worked_tensors()
{
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c{2, "GL(2), n = 3 tensors and formal dependence", {}};
    const young::YoungDiagram row({3});
    const auto t = young::enumerate_standard_tableaux(row).front();
    const std::vector<young::FormalTensor> phi{
        tensor({{Word{1, 1, 1}, 1}}),
        tensor({{Word{1, 1, 2}, 1}, {Word{1, 2, 1}, 1}, {Word{2, 1, 1}, 1}}),
        tensor({{Word{1, 2, 2}, 1}, {Word{2, 1, 2}, 1}, {Word{2, 2, 1}, 1}}),
        tensor({{Word{2, 2, 2}, 1}}),
    };
    const auto schemes = young::enumerate_schemes(row, 2);
    c.records.add("four symmetric schemes", schemes.size() == 4);
    for (std::size_t k = 0; k < schemes.size() && k < phi.size(); ++k) {
        const auto got = young::scheme_tensor(t, schemes[k]);
        c.records.add("phi_" + schemes[k].content().to_string(), got == phi[k], got.to_string());
    }

    const young::YoungDiagram hook({2, 1});
    const auto tabs = young::enumerate_standard_tableaux(hook);
    for (const auto& s : young::enumerate_schemes(hook, 2)) {
        std::vector<young::FormalTensor> got;
        for (const auto& tab : tabs)
            got.push_back(young::scheme_tensor(tab, s));
        const bool low = s.content() == Word{1, 1, 2};
        const std::vector<young::FormalTensor> expected =
            low ? std::vector<young::FormalTensor>{tensor({{Word{1, 1, 2}, 2}, {Word{2, 1, 1}, -1}, {Word{1, 2, 1}, -1}}),
                                                   tensor({{Word{2, 1, 1}, 2}, {Word{1, 1, 2}, -1}, {Word{1, 2, 1}, -1}})}
                : std::vector<young::FormalTensor>{tensor({{Word{2, 2, 1}, 2}, {Word{1, 2, 2}, -1}, {Word{2, 1, 2}, -1}}),
                                                   tensor({{Word{1, 2, 2}, 2}, {Word{2, 2, 1}, -1}, {Word{2, 1, 2}, -1}})};
        c.records.add("mixed span " + s.content().to_string(),
                      got.size() == 2 && young::tensor_rank(got) == 2 && young::same_span(got, expected));
    }
    merge(c.records, young::formal_dependence_check(), "");
    c.seconds = seconds_since(t0);
    budget(c.records, c.seconds, tensor_budget);
    return c;
}

struct Config {
    int R, p, nmax;
    std::string name() const
    {
        return "(" + std::to_string(R) + "," + std::to_string(p) + "," + std::to_string(nmax) + ")";
    }
};

Criterion green_relations()
{
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c{3, "Green trilinear, component and vacuum relations on interior(4)", {}};
    for (const Config cfg : {Config{2, 1, 6}, Config{2, 2, 6}, Config{4, 1, 6}, Config{4, 2, 5}}) {
        const auto t1 = std::chrono::steady_clock::now();
        const fock::ParaboseAlgebra alg(fock::ModeConfig{cfg.R, cfg.p, cfg.nmax});
        const Report r = fock::verify_green_relations(alg, green_depth);
        c.records.add(cfg.name() + " " + std::to_string(r.checks.size()) + " relations", r.passed() && !r.checks.empty());
        for (const auto& x : r.checks) {
            if (!x.pass)
                c.records.add(cfg.name() + " " + x.id, false, x.detail);
        }
        budget(c.records, seconds_since(t1), green_budget_per_config);
    }
    c.seconds = seconds_since(t0);
    return c;
}

Criterion psi121()
{
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c{4, "psi_121 from creation operators and physical spans", {}};
    const fock::ParaboseAlgebra p2(fock::ModeConfig{2, 2, 6});
    const auto psi = fock::psi121_from_creators(p2);
    const auto image = p2.monomial_image({{Word{1, 2, 1}, 2}, {Word{1, 1, 2}, -1}, {Word{2, 1, 1}, -1}});
    const auto k = parafock::proportionality(psi, image);
    c.records.add("proportional to 2|121> - |112> - |211>", k && !k->is_zero() && !psi.empty(),
                  k ? "scalar " + k->to_string() : "not proportional");
    const fock::ParaboseAlgebra p1(fock::ModeConfig{2, 1, 6});
    const auto s2 = fock::physical_span(p2, {1, 1, 2});
    const auto s1 = fock::physical_span(p1, {1, 1, 2});
    c.records.add("physical_span({1,1,2}) = 2 for p = 2", s2 == 2, std::to_string(s2));
    c.records.add("physical_span({1,1,2}) = 1 for p = 1", s1 == 1, std::to_string(s1));
    c.seconds = seconds_since(t0);
    budget(c.records, c.seconds, psi_budget);
    return c;
}

Criterion closure()
{
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c{5, "closure of the 15 generators and Jacobi identities", {}};
    const unsigned threads = worker_threads();

    auto a1 = std::make_shared<const fock::ParaboseAlgebra>(fock::ModeConfig{4, 1, 8});
    const auto t1 = conformal::closure_table(conformal::build_generators(a1), closure_depth, threads);
    c.records.add("p=1 nmax=8 all 105 brackets in span", t1.closed() && t1.rows.size() == 105,
                  "family rank " + std::to_string(t1.family_rank));
    for (const auto& f : t1.failures())
        c.records.add("p=1 " + f, false);
    a1.reset();

    auto a2 = std::make_shared<const fock::ParaboseAlgebra>(fock::ModeConfig{4, 2, 6});
    const auto t2 = conformal::closure_table(conformal::build_generators(a2), closure_depth, threads);
    a2.reset();
    c.records.add("p=2 nmax=6 all 105 brackets in span", t2.closed() && t2.rows.size() == 105);
    bool same = t1.rows.size() == t2.rows.size();
    for (std::size_t k = 0; same && k < t1.rows.size(); ++k) {
        const auto& x = t1.rows[k].coefficients;
        const auto& y = t2.rows[k].coefficients;
        if (!x || !y) {
            same = false;
            break;
        }
        for (std::size_t g = 0; g < conformal::generator_count; ++g)
            same = same && (*x)[g] == (*y)[g];
    }
    c.records.add("p=1 and p=2 tables agree up to the identity column", same);

    auto a3 = std::make_shared<const fock::ParaboseAlgebra>(fock::ModeConfig{4, 1, 10});
    const Report j = conformal::jacobi_check(conformal::build_generators(a3), jacobi_depth,
                                             conformal::TripleSelection::all, threads);
    c.records.add("Jacobi, 455 triples at nmax=10 on interior(6)", j.passed() && j.checks.size() == 455,
                  std::to_string(j.checks.size() - j.failures()) + "/" + std::to_string(j.checks.size()));
    c.seconds = seconds_since(t0);
    budget(c.records, c.seconds, closure_budget);
    return c;
}

Criterion vacuum()
{
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c{6, "Lorentz vacuum coefficients and Poincare invariance", {}};
    for (int K = 3; K <= 5; ++K) {
        auto alg = std::make_shared<const fock::ParaboseAlgebra>(fock::ModeConfig{4, 1, 2 * K + 4});
        const auto omega = states::lorentz_vacuum(*alg, K);
        bool coeffs = true;
        for (int mu = 0; mu <= K; ++mu)
            for (int lambda = 0; mu + lambda <= K; ++lambda)
                coeffs = coeffs && states::vacuum_term_coefficient(*alg, omega, mu, lambda) ==
                                       states::lorentz_vacuum_coefficient(mu, lambda);
        const std::string tag = "K=" + std::to_string(K) + " ";
        c.records.add(tag + "coefficients match the closed form", coeffs);
        const auto P = conformal::build_poincare(conformal::build_generators(alg));
        const auto r = states::check_vacuum_invariance(omega, P, vacuum_boundary);
        for (const auto& cond : r.conditions) {
            std::string detail = std::string(states::verdict_name(cond.verdict));
            if (cond.recorded_constant)
                detail += ", c = " + cond.recorded_constant->to_string();
            c.records.add(tag + cond.condition + " on shells <= " + std::to_string(r.checked_through),
                          cond.interior_clean, detail);
        }
    }
    c.seconds = seconds_since(t0);
    budget(c.records, c.seconds, vacuum_budget);
    return c;
}

Criterion particles()
{
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c{7, "zeron and neutrino conditions, K = K' = 2, nmax = 10", {}};
    auto alg = std::make_shared<const fock::ParaboseAlgebra>(fock::ModeConfig{4, 1, 10});
    const auto P = conformal::build_poincare(conformal::build_generators(alg));
    const auto omega = states::lorentz_vacuum(*alg, 2);
    for (const std::string eps : {"1", "1/2"}) {
        const mpq_class e = parafock::parse_rational(eps);
        const auto z = states::zeron(*alg, omega, e, 2);
        const auto nu = states::neutrino(*alg, z);
        c.records.add("eps=" + eps + " neutrino is nonzero", !nu.vector.empty());
        for (const auto* s : {&z, &nu}) {
            const auto r = states::check_particle_conditions(*s, P, particle_boundary);
            for (const auto& cond : r.conditions) {
                std::string detail = std::string(states::verdict_name(cond.verdict));
                for (const auto& sc : cond.shells) {
                    if (sc.n <= r.checked_through)
                        detail += ", shell " + std::to_string(sc.n) + ": " +
                                  std::to_string(sc.residual_component_count) + " components";
                }
                c.records.add("eps=" + eps + " " + std::string(states::kind_name(s->kind)) + " " + cond.condition +
                                  " on shells <= " + std::to_string(r.checked_through),
                              cond.interior_clean, detail);
            }
        }
    }
    c.seconds = seconds_since(t0);
    budget(c.records, c.seconds, particle_budget);
    return c;
}

Criterion cosmology()
{
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c{8, "cosmology exponents with default constants", {}};
    const auto rows = cosmo::cosmo_table(cosmo::CosmoConstants::defaults());
    const std::vector<std::pair<std::string, int>> wanted{{"n_p", 40},  {"N", 120},   {"z_p", 80},
                                                          {"E_0", -32}, {"U", 88},    {"n_ph", 30},
                                                          {"z_ph", 90}, {"z_ph/z_p", 10}, {"dS_max", 41}};
    for (const auto& [q, e] : wanted) {
        const cosmo::CosmoRow* row = nullptr;
        for (const auto& r : rows)
            if (r.quantity == q)
                row = &r;
        if (!row) {
            c.records.add(q, false, "missing row");
            continue;
        }
        const int diff = row->computed.exponent() - e;
        c.records.add(q + " = 10^" + std::to_string(e) + " within " + std::to_string(cosmo_decades) + " decade",
                      diff >= -cosmo_decades && diff <= cosmo_decades, row->computed.to_string());
    }
    for (const auto& r : rows) {
        if (r.quantity == "n_e")
            c.records.add("n_e reported and flagged", r.status == cosmo::RowStatus::flagged,
                          r.computed.to_string() + ", log10 gap " + std::to_string(r.decade_difference));
    }
    const auto forms = cosmo::bekenstein_forms(cosmo::CosmoConstants::defaults().universe_mass,
                                               cosmo::CosmoConstants::defaults().proton_mass,
                                               cosmo::CosmoConstants::defaults().planck_mass);
    c.records.add("entropy difference and product forms agree", forms.difference_form == forms.product_form);
    c.seconds = seconds_since(t0);
    budget(c.records, c.seconds, cosmo_budget);
    return c;
}

Criterion oracle()
{
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c{9, "dense brute-force engine reproduces every result on bases <= 2000 states", {}};
    auto add = [&](const Report& r) {
        merge(c.records, r, r.name + " ");
        std::cout << "    oracle " << r.name << ": " << r.checks.size() - r.failures() << "/" << r.checks.size()
                  << " (" << fmt_seconds(seconds_since(t0)) << ")\n";
        std::cout.flush();
    };
    for (const Config cfg : {Config{2, 1, 6}, Config{2, 2, 6}, Config{4, 1, 6}, Config{4, 2, 5}}) {
        add(equivalence::operators(cfg.R, cfg.p, cfg.nmax));
        add(equivalence::green(cfg.R, cfg.p, cfg.nmax));
    }
    add(equivalence::psi121(6));
    add(equivalence::closure(1, 8));
    add(equivalence::jacobi(10));
    add(equivalence::vacuum(3, 10));
    add(equivalence::vacuum(4, 12));
    add(equivalence::particles(2, 2, "1", 10));
    add(equivalence::particles(2, 2, "1/2", 10));
    c.seconds = seconds_since(t0);
    return c;
}

}  // namespace

int main()
{
    const std::vector<std::function<Criterion()>> criteria{young_counting, worked_tensors, green_relations, psi121,
                                                           closure,        vacuum,         particles,       cosmology,
                                                           oracle};
    int failed = 0;
    for (const auto& run : criteria) {
        if (!report(run()))
            ++failed;
    }
    std::cout << (failed == 0 ? "acceptance: all criteria pass\n"
                              : "acceptance: " + std::to_string(failed) + " criteria failed\n");
    return failed == 0 ? 0 : 1;
}
