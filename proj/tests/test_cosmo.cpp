#include "parafock/cosmo.hpp"

#include <doctest.h>

#include <cmath>

using namespace parafock::cosmo;

namespace {

const CosmoRow& row(const std::vector<CosmoRow>& rows, const std::string& q)
{
    for (const auto& r : rows) {
        if (r.quantity == q)
            return r;
    }
    throw std::out_of_range(q);
}

}  // namespace

TEST_CASE("units")
{
    CHECK(Unit::parse("eV*cm").to_string() == "cm*eV");
    CHECK(Unit::parse("cm^-2").pow(-1).to_string() == "cm^2");
    CHECK(Unit::parse("1").dimensionless());
    CHECK((Unit::of("cm") / Unit::of("cm")).dimensionless());
    CHECK(Unit::parse("cm^2").root(2) == Unit::of("cm"));
    CHECK_THROWS_AS(Unit::parse("cm^"), UnitError);
    CHECK_THROWS_AS(Unit::of("cm").root(2), UnitError);
}

TEST_CASE("magnitudes")
{
    const Magnitude a(1.5, 3, Unit::of("cm"));
    CHECK(a.number_string() == "1.5e3");
    CHECK(a.to_string() == "1.5e3 cm");
    CHECK((a * Magnitude(2, 0)).number_string() == "3e3");
    CHECK((a / a).unit().dimensionless());
    CHECK((a / a).number_string() == "1e0");
    CHECK(Magnitude(1, 40).pow(3).exponent() == 120);
    CHECK(Magnitude(1, 120).root(4).exponent() == 30);
    CHECK(a.exact() == mpq_class(1500));
    CHECK_THROWS_AS(a + Magnitude(1, 0, Unit::of("eV")), UnitError);
    CHECK((a + a).number_string() == "3e3");
    CHECK_THROWS_AS(Magnitude::zero().log10(), std::domain_error);
    CHECK(Magnitude::from_log10(2.5L).number_string() == "3.16e2");
}

TEST_CASE("estimates with default constants")
{
    const auto c = CosmoConstants::defaults();
    CHECK(ur_count(c.cosmic_radius, c.proton_wavelength).exponent() == 40);
    CHECK(ur_count(c.cosmic_radius, c.cosmic_radius).number_string() == "1e0");
    CHECK(total_urs(c.cosmic_radius, c.proton_wavelength).exponent() == 120);
    CHECK(total_urs(c.cosmic_radius, c.cosmic_radius).number_string() == "1e0");
    const Magnitude E0 = ur_energy(c.cosmic_radius, c.hbar_c);
    CHECK(E0.exponent() == -32);
    CHECK(E0.unit() == Unit::of("eV"));
    const auto ph = photon_numbers(Magnitude(1, 120), Magnitude(1, 80));
    CHECK(ph.n_ph.exponent() == 30);
    CHECK(ph.z_ph.exponent() == 90);
    CHECK(ph.ratio.exponent() == 10);
    CHECK(bekenstein_delta(c.universe_mass, Magnitude::zero(Unit::of("g")), c.planck_mass).is_zero());
    // E = E0 recovers the cosmic radius.
    CHECK(std::abs(static_cast<double>(uncertainty_size(E0, c.hbar_c).log10() - c.cosmic_radius.log10())) < 0.01);
}

TEST_CASE("scaling")
{
    // Three significant figures are kept, so ratios hold to the last digit.
    const auto close = [](long double x, long double y) { return std::abs(static_cast<double>(x - y)) < 0.005; };
    const long double log2 = std::log10(2.0L);
    const auto c = CosmoConstants::defaults();
    const Magnitude R = c.cosmic_radius, R10 = R * Magnitude(1, 1), R2 = R * Magnitude(2, 0);
    CHECK(total_urs(R10, c.proton_wavelength).exponent() - total_urs(R, c.proton_wavelength).exponent() == 3);
    CHECK(close(ur_energy(R, c.hbar_c).log10() - ur_energy(R2, c.hbar_c).log10(), log2));
    CHECK(close(lambda_estimate(R).log10() - lambda_estimate(R2).log10(), 2 * log2));
    const Magnitude E(1, 9, Unit::of("eV"));
    CHECK(close(uncertainty_size(E, c.hbar_c).log10() - uncertainty_size(E * Magnitude(2, 0), c.hbar_c).log10(), log2));
    const Magnitude back = ur_energy(uncertainty_size(E, c.hbar_c), c.hbar_c);
    CHECK(close(back.log10(), E.log10()));
    CHECK(back.unit() == E.unit());
}

TEST_CASE("entropy forms")
{
    const auto c = CosmoConstants::defaults();
    const auto f = bekenstein_forms(c.universe_mass, c.proton_mass, c.planck_mass);
    CHECK(f.difference_form == f.product_form);
    CHECK(f.product_form.exponent() == 42);
}

TEST_CASE("table")
{
    const auto rows = cosmo_table(CosmoConstants::defaults());
    CHECK(table_passes(rows));
    CHECK(row(rows, "n_p").exponent_difference == 0);
    CHECK(row(rows, "N").exponent_difference == 0);
    CHECK(row(rows, "z_p").exponent_difference == 0);
    CHECK(row(rows, "E_0").exponent_difference == 0);
    CHECK(row(rows, "U").exponent_difference == 0);
    CHECK(row(rows, "n_ph").exponent_difference == 0);
    CHECK(row(rows, "z_ph").exponent_difference == 0);
    CHECK(row(rows, "z_ph/z_p").exponent_difference == 0);
    CHECK(std::abs(row(rows, "dS_max").exponent_difference) <= 1);
    CHECK(row(rows, "n_e").status == RowStatus::flagged);
    CHECK(row(rows, "n_e").decade_difference < -1.0);
}

TEST_CASE("constants files")
{
    const auto c = parse_constants(R"({"constants": [
        {"name": "cosmic_radius", "mantissa": 1.32141, "exponent": 28, "unit": "m"},
        {"name": "proton_rest_energy", "mantissa": 1, "exponent": 0, "unit": "GeV"}]})");
    CHECK(c.cosmic_radius.exponent() == 30);
    CHECK(c.proton_energy == CosmoConstants::defaults().proton_energy);
    CHECK(c.planck_mass == CosmoConstants::defaults().planck_mass);

    CHECK(parse_constants("[]").hbar_c == CosmoConstants::defaults().hbar_c);
    CHECK_THROWS_AS(parse_constants("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_constants(R"([{"name": "dark_energy", "mantissa": 1, "exponent": 0, "unit": "1"}])"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_constants(R"([{"name": "cosmic_radius", "mantissa": 1, "exponent": 0, "unit": "furlong"}])"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_constants(R"([{"name": "cosmic_radius", "mantissa": -1, "exponent": 0, "unit": "cm"}])"),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_constants("/nonexistent/constants.json"), std::invalid_argument);
}
