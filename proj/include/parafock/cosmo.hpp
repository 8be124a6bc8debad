#ifndef PARAFOCK_COSMO_HPP
#define PARAFOCK_COSMO_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace parafock::cosmo {

class UnitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Product of base symbols raised to integer powers, e.g. eV*cm or cm^-2.
class Unit {
public:
    Unit() = default;
    /// "1" or "" is dimensionless; otherwise '*'-separated factors "sym" or
    /// "sym^k". Throws UnitError on malformed text.
    static Unit parse(const std::string& text);
    static Unit of(const std::string& symbol) { return parse(symbol); }

    const std::map<std::string, int>& powers() const { return powers_; }
    bool dimensionless() const { return powers_.empty(); }

    Unit operator*(const Unit& o) const;
    Unit operator/(const Unit& o) const;
    Unit pow(int k) const;
    /// Throws UnitError unless every power is divisible by k.
    Unit root(int k) const;

    /// Canonical text: factors in symbol order, "1" when dimensionless.
    std::string to_string() const;

    friend bool operator==(const Unit&, const Unit&) = default;

private:
    std::map<std::string, int> powers_;
};

/// sign * mantissa * 10^exponent with a three-significant-figure mantissa in
/// [1, 10), stored as integer hundredths so that it round-trips exactly.
class Magnitude {
public:
    Magnitude() = default;
    /// Rounds mantissa * 10^exponent to three significant figures.
    Magnitude(double mantissa, int exponent, Unit unit = {});
    static Magnitude zero(Unit unit = {});
    /// 10^l, rounded to three significant figures.
    static Magnitude from_log10(long double l, Unit unit = {});

    bool is_zero() const { return hundredths_ == 0; }
    int sign() const { return hundredths_ > 0 ? 1 : (hundredths_ < 0 ? -1 : 0); }
    double mantissa() const { return static_cast<double>(hundredths_) / 100.0; }
    int exponent() const { return exponent_; }
    const Unit& unit() const { return unit_; }
    /// log10 of the absolute value. Throws std::domain_error on zero.
    long double log10() const;
    /// The exact decimal value.
    mpq_class exact() const;

    Magnitude operator*(const Magnitude& o) const;
    Magnitude operator/(const Magnitude& o) const;
    /// Throws UnitError when the units differ.
    Magnitude operator+(const Magnitude& o) const;
    Magnitude pow(int k) const;
    /// Real k-th root of a positive magnitude.
    Magnitude root(int k) const;
    Magnitude with_unit(Unit u) const;

    /// "1.49e-32 eV"; the unit is omitted when dimensionless.
    std::string to_string() const;
    /// "1.49e-32" without unit.
    std::string number_string() const;

    friend bool operator==(const Magnitude&, const Magnitude&) = default;

private:
    long hundredths_ = 0;
    int exponent_ = 0;
    Unit unit_;
};

/// Inputs, keyed by name. Every value carries explicit units.
struct CosmoConstants {
    Magnitude cosmic_radius;          // cm
    Magnitude proton_wavelength;      // cm
    Magnitude proton_electron_ratio;  // 1
    Magnitude proton_energy;          // eV
    Magnitude universe_mass;          // g
    Magnitude proton_mass;            // g
    Magnitude planck_mass;            // g
    Magnitude planck_length;          // cm
    Magnitude hbar_c;                 // eV*cm

    /// R / lambda_p = 10^40, E_p = 1 GeV, M_u = 10^55 g, m_p = 10^-24 g,
    /// m_0 = 10^-5 g, m_p / m_e = 1836, hbar c = 1.97e-5 eV cm.
    static CosmoConstants defaults();

    /// Throws std::invalid_argument when a value is not positive or its unit
    /// is not the expected dimension.
    void validate() const;
};

/// Reads a JSON list of {name, mantissa, exponent, unit}. Names not present
/// keep their defaults. Recognized units are converted (m, km -> cm; keV,
/// MeV, GeV -> eV; kg -> g). Throws std::invalid_argument on unknown names,
/// unknown units or malformed JSON.
CosmoConstants load_constants(const std::string& path);
CosmoConstants parse_constants(const std::string& json_text);

/// n = R / lambda; dimensionless.
Magnitude ur_count(const Magnitude& R, const Magnitude& lambda);
/// N = R^3 / lambda_p^3
Magnitude total_urs(const Magnitude& R, const Magnitude& lambda_p);
/// E_0 = hbar c / R
Magnitude ur_energy(const Magnitude& R, const Magnitude& hbar_c);
/// dx = hbar c / E
Magnitude uncertainty_size(const Magnitude& E, const Magnitude& hbar_c);

struct PhotonNumbers {
    Magnitude n_ph;   // N^(1/4)
    Magnitude z_ph;   // N / n_ph
    Magnitude ratio;  // z_ph / z_p
};
PhotonNumbers photon_numbers(const Magnitude& N, const Magnitude& z_p);

/// 8 pi M m / m_0^2, dimensionless (units of m_0^2).
Magnitude bekenstein_delta(const Magnitude& M, const Magnitude& m, const Magnitude& m0);

/// Both sides of 4 pi ((M + m)^2 - M^2) = 8 pi M m + 4 pi m^2, evaluated in
/// exact rational arithmetic before rounding, in units of m_0^2.
struct BekensteinForms {
    Magnitude difference_form;  // 4 pi ((M + m)^2 - M^2)
    Magnitude product_form;     // 8 pi M m
};
BekensteinForms bekenstein_forms(const Magnitude& M, const Magnitude& m, const Magnitude& m0);

/// 1 / R^2 in cm^-2.
Magnitude lambda_estimate(const Magnitude& R);
/// (l_P / R)^2, dimensionless.
Magnitude lambda_planck_units(const Magnitude& R, const Magnitude& planck_length);

enum class RowStatus { pass, fail, flagged, info };
std::string_view status_name(RowStatus s);

struct CosmoRow {
    std::string quantity;
    Magnitude computed;
    Magnitude quoted_value;
    /// log10(computed) - log10(quoted_value), rounded to two decimals.
    double decade_difference = 0;
    /// computed.exponent() - quoted_value.exponent()
    int exponent_difference = 0;
    /// Allowed |exponent_difference|; nullopt for rows that are reported only.
    std::optional<int> tolerance;
    RowStatus status = RowStatus::info;
    std::string note;
};

/// Every estimate compared with its quoted value. A row with a tolerance
/// passes when |exponent_difference| <= tolerance; n_e is flagged, never
/// failed; Lambda in cm^-2 is informational.
std::vector<CosmoRow> cosmo_table(const CosmoConstants& c);

bool table_passes(const std::vector<CosmoRow>& rows);

}  // namespace parafock::cosmo

#endif
