#include "parafock/exactalg/gaussian_rational.hpp"
#include "parafock/exactalg/linear.hpp"
#include "parafock/exactalg/sparse.hpp"
#include "parafock/fock.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using parafock::BasisMismatch;
using parafock::GaussianRational;
using parafock::Index;
using parafock::ScalarOp;
using parafock::SparseOp;
using parafock::SparseVec;
using GR = GaussianRational;

namespace {

GR random_scalar(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    return {mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))};
}

GR ci(long re, long im)
{
    return {mpq_class(re), mpq_class(im)};
}

}  // namespace

TEST_CASE("scalar arithmetic examples")
{
    CHECK(parafock::scalar_arith(GR::rational(1, 2), GR::i(), ScalarOp::mul) == GR(mpq_class(0), mpq_class(1, 2)));
    CHECK(parafock::scalar_arith(GR::i(), GR(0), ScalarOp::conj) == ci(0, -1));
    CHECK(parafock::scalar_arith(GR::rational(2, 3), GR::rational(1, 3), ScalarOp::div) == GR(2));
    CHECK_THROWS_AS(parafock::scalar_arith(GR(1), GR(0), ScalarOp::div), std::domain_error);
}

TEST_CASE("text form")
{
    CHECK(GR(0).to_string() == "0");
    CHECK(GR::rational(3, 2).to_string() == "3/2");
    CHECK((-GR::i()).to_string() == "-i");
    CHECK(GR(mpq_class(0), mpq_class(1, 2)).to_string() == "1/2*i");
    CHECK(GR(mpq_class(1), mpq_class(-1, 2)).to_string() == "1-1/2*i");
}

TEST_CASE("parse_rational")
{
    CHECK(parafock::parse_rational("6/4") == mpq_class(3, 2));
    CHECK(parafock::parse_rational("-7") == mpq_class(-7));
    CHECK_THROWS_AS(parafock::parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parafock::parse_rational("x"), std::invalid_argument);
}

TEST_CASE("field laws on random Gaussian rationals")
{
    std::mt19937_64 rng(20261016);
    for (int k = 0; k < 200; ++k) {
        const GR x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK(x.conj().conj() == x);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x * x.conj()).is_real());
        CHECK((x * x.conj()).re() == x.norm2());
        if (!y.is_zero())
            CHECK((x / y) * y == x);
    }
}

TEST_CASE("pow")
{
    CHECK(parafock::pow(GR::i(), 0) == GR(1));
    CHECK(parafock::pow(GR::i(), 2) == GR(-1));
    CHECK(parafock::pow(GR::i(), 7) == -GR::i());
    CHECK(parafock::pow(ci(1, 1), 4) == GR(-4));
}

TEST_CASE("sparse vectors and operators")
{
    const auto tag = parafock::make_basis_tag(5);
    SparseVec v(tag);
    v.add(1, GR(2));
    v.add(3, GR::i());
    v.add(1, GR(-2));
    CHECK(v.size() == 1);
    CHECK(v.at(1).is_zero());

    SUBCASE("identity and zero operator")
    {
        CHECK(parafock::op_apply(SparseOp::identity(tag), v) == v);
        CHECK(parafock::op_apply(SparseOp::zero(tag), v).empty());
    }
    SUBCASE("commutator of an operator with itself vanishes")
    {
        SparseOp a(tag, {1});
        a.add(1, 0, GR(3));
        a.add(2, 1, GR::i());
        CHECK(parafock::commutator(a, a).is_zero());
        CHECK(parafock::commutator(a, a, true) == GR(2) * (a * a));
    }
    SUBCASE("basis mismatch")
    {
        const auto other = parafock::make_basis_tag(5);
        CHECK_FALSE(other == tag);
        CHECK_THROWS_AS(parafock::op_apply(SparseOp::identity(other), v), BasisMismatch);
    }
}

TEST_CASE("grading shifts combine under products and are honoured by ladder operators")
{
    const parafock::fock::ParaboseAlgebra alg(parafock::fock::ModeConfig{2, 2, 4});
    const auto& basis = alg.basis();
    std::vector<int> shells;
    for (Index i = 0; i < basis.size(); ++i)
        shells.push_back(basis.shell(i));
    for (int r = 1; r <= 2; ++r) {
        CHECK(alg.a(r).grading_shifts() == std::set<int>{-1});
        CHECK(alg.a_dag(r).grading_shifts() == std::set<int>{1});
        CHECK_FALSE(parafock::find_grading_violation(alg.a(r), shells));
        CHECK_FALSE(parafock::find_grading_violation(alg.tau(r, 1), shells));
        CHECK_FALSE(parafock::find_grading_violation(alg.alpha_dag(r, 1), shells));
    }
    const SparseOp prod = alg.a(1) * alg.a_dag(2);
    CHECK(prod.grading_shifts() == std::set<int>{0});
    CHECK(parafock::pairwise_sums({-1, 1}, {-1, 1}) == std::set<int>{-2, 0, 2});

    SparseOp bad(alg.tag(), {0});
    bad.add(1, 0, GR(1));
    const auto viol = parafock::find_grading_violation(bad, shells);
    REQUIRE(viol);
    CHECK(viol->shift == 1);
}

TEST_CASE("solve_in_span")
{
    const parafock::fock::ParaboseAlgebra alg(parafock::fock::ModeConfig{2, 1, 4});
    std::vector<Index> interior;
    for (Index i = 0; i < alg.basis().size(); ++i) {
        if (alg.basis().shell(i) <= 2)
            interior.push_back(i);
    }
    const std::vector<SparseOp> family{alg.tau(1, 1), alg.tau(1, 2), alg.tau(2, 1), alg.identity()};

    const auto first = parafock::solve_in_span(family[0], family, interior);
    REQUIRE(first);
    CHECK(*first == std::vector<GR>{GR(1), GR(0), GR(0), GR(0)});

    const auto twice = parafock::solve_in_span(GR(2) * family[1], family, interior);
    REQUIRE(twice);
    CHECK(*twice == std::vector<GR>{GR(0), GR(2), GR(0), GR(0)});

    // [tau_12, tau_21] = tau_11 - tau_22 for bosons; tau_22 is outside the family.
    const SparseOp br = parafock::commutator(alg.tau(1, 2), alg.tau(2, 1));
    CHECK_FALSE(parafock::solve_in_span(br, family, interior));
    const std::vector<SparseOp> wider{alg.tau(1, 1), alg.tau(2, 2), alg.identity()};
    const auto c = parafock::solve_in_span(br, wider, interior);
    REQUIRE(c);
    CHECK(*c == std::vector<GR>{GR(1), GR(-1), GR(0)});

    CHECK_THROWS_AS(parafock::solve_in_span(br, family, {}), std::invalid_argument);
}

TEST_CASE("rank and proportionality")
{
    const auto tag = parafock::make_basis_tag(3);
    const SparseVec e0 = SparseVec::unit(tag, 0), e1 = SparseVec::unit(tag, 1);
    const SparseVec s = e0 + GR::i() * e1;
    const std::vector<SparseVec> fam{e0, e1, s};
    CHECK(parafock::rank(fam) == 2);
    CHECK(parafock::proportionality(GR(mpq_class(0), mpq_class(3, 7)) * s, s) == GR(mpq_class(0), mpq_class(3, 7)));
    CHECK_FALSE(parafock::proportionality(e0, s));
    CHECK(parafock::proportionality(SparseVec(tag), s) == GR(0));
}

TEST_CASE("solve_square")
{
    const std::vector<std::vector<GR>> a{{GR(2), GR(1)}, {GR(1), GR::i()}};
    const std::vector<GR> b{GR(3), ci(1, 1)};
    const auto x = parafock::solve_square(a, b);
    CHECK(a[0][0] * x[0] + a[0][1] * x[1] == b[0]);
    CHECK(a[1][0] * x[0] + a[1][1] * x[1] == b[1]);
    CHECK_THROWS_AS(parafock::solve_square({{GR(1), GR(2)}, {GR(2), GR(4)}}, {GR(1), GR(1)}), std::domain_error);
}
