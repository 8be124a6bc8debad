#include "parafock/conformal.hpp"

#include <doctest.h>

#include <memory>

using namespace parafock::conformal;
using parafock::GaussianRational;
using parafock::Index;
using parafock::SparseVec;
namespace fock = parafock::fock;
using GR = GaussianRational;

namespace {

std::shared_ptr<const fock::ParaboseAlgebra> algebra(int p, int nmax)
{
    return std::make_shared<const fock::ParaboseAlgebra>(fock::ModeConfig{4, p, nmax});
}

}  // namespace

TEST_CASE("generator names round trip")
{
    for (std::size_t k = 0; k < generator_count; ++k) {
        const auto g = static_cast<Gen>(k);
        CHECK(parse_generator(name(g)) == g);
    }
    CHECK_FALSE(parse_generator("M44"));
    CHECK(closure_column_name(15) == "I");
}

TEST_CASE("generators on the vacuum")
{
    for (int p = 1; p <= 2; ++p) {
        const auto alg = algebra(p, 4);
        const auto g = build_generators(alg);
        const SparseVec omega = alg->vacuum();
        CHECK(op_apply(g[Gen::M12], omega).empty());
        CHECK(op_apply(g[Gen::M46], omega) == GR(mpq_class(0), mpq_class(p)) * omega);
        const auto P = build_poincare(g);
        CHECK(op_apply(P.P1, omega) == op_apply(g[Gen::M15], omega) + op_apply(g[Gen::N16], omega));
        CHECK_FALSE(op_apply(P.P1, omega).empty());
    }
    CHECK_THROWS_AS(build_generators(std::make_shared<const fock::ParaboseAlgebra>(fock::ModeConfig{2, 1, 4})),
                    std::invalid_argument);
}

TEST_CASE("generators respect their grading")
{
    const auto alg = algebra(1, 6);
    const auto g = build_generators(alg);
    std::vector<int> shells;
    for (Index i = 0; i < alg->basis().size(); ++i)
        shells.push_back(alg->basis().shell(i));
    for (std::size_t k = 0; k < generator_count; ++k) {
        const bool compact = k <= static_cast<std::size_t>(Gen::M46);
        CHECK(g.at(k).grading_shifts() == (compact ? std::set<int>{0} : std::set<int>{-2, 2}));
        CHECK_FALSE(parafock::find_grading_violation(g.at(k), shells));
    }
}

TEST_CASE("Poincare set order")
{
    const auto P = build_poincare(build_generators(algebra(1, 4)));
    const auto named = P.named();
    REQUIRE(named.size() == 10);
    const std::vector<std::string> order{"M12", "M13", "M23", "N14", "N24", "N34", "P1", "P2", "P3", "P0"};
    for (std::size_t k = 0; k < order.size(); ++k)
        CHECK(named[k].name == order[k]);
}

TEST_CASE("rotation brackets")
{
    const auto g = build_generators(algebra(1, 6));
    const auto c13 = commutator_coefficients(g, Gen::M12, Gen::M13);
    REQUIRE(c13);
    CHECK(format_expansion(c13) == "-M23");
    const auto c23 = commutator_coefficients(g, Gen::M12, Gen::M23);
    REQUIRE(c23);
    CHECK(format_expansion(c23) == "M13");
    const auto self = commutator_coefficients(g, Gen::M12, Gen::M12);
    REQUIRE(self);
    CHECK(format_expansion(self) == "0");
    CHECK(format_expansion(std::nullopt) == "NOT_IN_SPAN");

    // Every bracket among the rotations has unit-modulus coefficients.
    for (Gen a : {Gen::M12, Gen::M13, Gen::M23}) {
        for (Gen b : {Gen::M12, Gen::M13, Gen::M23}) {
            const auto c = commutator_coefficients(g, a, b);
            REQUIRE(c);
            for (const GR& x : *c)
                CHECK((x.is_zero() || x.norm2() == 1));
        }
    }
}

TEST_CASE("closure table at n_max = 6")
{
    const auto g = build_generators(algebra(1, 6));
    const auto t1 = closure_table(g, 4, 1);
    CHECK(t1.rows.size() == 105);
    CHECK(t1.family_rank == 16);
    CHECK(t1.closed());
    CHECK(t1.failures().empty());
    const auto t4 = closure_table(g, 4, 4);
    CHECK(t4.to_text() == t1.to_text());
    CHECK(t1.to_text().find("[N45,N56] = M46") != std::string::npos);
    CHECK_THROWS_AS(closure_table(g, 3), std::invalid_argument);
}

TEST_CASE("Jacobi sample")
{
    const auto g = build_generators(algebra(1, 8));
    const auto rep = jacobi_check(g, 6, TripleSelection::sample, 2);
    CHECK(rep.checks.size() == 35);
    CHECK(rep.passed());
    CHECK_THROWS_AS(jacobi_check(g, 5), std::invalid_argument);
}
