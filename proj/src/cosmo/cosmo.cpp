#include "parafock/cosmo.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace parafock::cosmo {

namespace {

Unit dimensionless()
{
    return {};
}

void require_unit(const Magnitude& m, const Unit& want, const char* what)
{
    if (m.unit() != want)
        throw UnitError(std::string(what) + ": expected unit " + want.to_string() + ", got " + m.unit().to_string());
}

mpz_class pow10(int k)
{
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return out;
}

/// Three-significant-figure magnitude of an exact rational.
Magnitude from_exact(mpq_class q, Unit unit)
{
    if (sgn(q) == 0)
        return Magnitude::zero(std::move(unit));
    const int sign = sgn(q);
    q = abs(q);
    // Bring q into [1, 10) exactly, then read the mantissa as a double.
    long bits = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
                static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
    int e = static_cast<int>(std::floor(static_cast<double>(bits) * 0.30102999566398120));
    auto scaled = [&](int k) {
        mpq_class s = q;
        if (k > 0)
            s /= mpq_class(pow10(k));
        else if (k < 0)
            s *= mpq_class(pow10(-k));
        return s;
    };
    mpq_class s = scaled(e);
    while (s >= 10) {
        ++e;
        s = scaled(e);
    }
    while (s < 1) {
        --e;
        s = scaled(e);
    }
    return Magnitude(sign * s.get_d(), e, std::move(unit));
}

Magnitude times_pi(const Magnitude& m)
{
    return Magnitude::from_log10(m.log10() + std::log10(std::numbers::pi_v<long double>), m.unit());
}

double round2(long double x)
{
    return static_cast<double>(std::round(x * 100.0L) / 100.0L);
}

}  // namespace

// ---- Unit ----

Unit Unit::parse(const std::string& text)
{
    Unit u;
    if (text.empty() || text == "1")
        return u;
    std::stringstream ss(text);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
        if (factor.empty())
            throw UnitError("malformed unit '" + text + "'");
        std::string symbol = factor;
        int power = 1;
        if (auto caret = factor.find('^'); caret != std::string::npos) {
            symbol = factor.substr(0, caret);
            const std::string p = factor.substr(caret + 1);
            std::size_t used = 0;
            try {
                power = std::stoi(p, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != p.size())
                throw UnitError("malformed unit power in '" + text + "'");
        }
        if (symbol.empty())
            throw UnitError("malformed unit '" + text + "'");
        for (char c : symbol) {
            if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
                throw UnitError("malformed unit symbol '" + symbol + "'");
        }
        if ((u.powers_[symbol] += power) == 0)
            u.powers_.erase(symbol);
    }
    return u;
}

Unit Unit::operator*(const Unit& o) const
{
    Unit out = *this;
    for (const auto& [s, p] : o.powers_) {
        if ((out.powers_[s] += p) == 0)
            out.powers_.erase(s);
    }
    return out;
}

Unit Unit::operator/(const Unit& o) const
{
    return *this * o.pow(-1);
}

Unit Unit::pow(int k) const
{
    Unit out;
    if (k == 0)
        return out;
    for (const auto& [s, p] : powers_)
        out.powers_[s] = p * k;
    return out;
}

Unit Unit::root(int k) const
{
    if (k <= 0)
        throw std::invalid_argument("root order must be positive");
    Unit out;
    for (const auto& [s, p] : powers_) {
        if (p % k != 0)
            throw UnitError("unit " + to_string() + " has no " + std::to_string(k) + "-th root");
        out.powers_[s] = p / k;
    }
    return out;
}

std::string Unit::to_string() const
{
    if (powers_.empty())
        return "1";
    std::string out;
    for (const auto& [s, p] : powers_) {
        if (!out.empty())
            out += '*';
        out += s;
        if (p != 1)
            out += "^" + std::to_string(p);
    }
    return out;
}

// ---- Magnitude ----

Magnitude::Magnitude(double mantissa, int exponent, Unit unit) : unit_(std::move(unit))
{
    if (!std::isfinite(mantissa))
        throw std::domain_error("magnitude mantissa is not finite");
    if (mantissa == 0)
        return;
    const int sign = mantissa < 0 ? -1 : 1;
    double m = std::fabs(mantissa);
    while (m >= 10) {
        m /= 10;
        ++exponent;
    }
    while (m < 1) {
        m *= 10;
        --exponent;
    }
    long h = std::lround(m * 100);
    if (h >= 1000) {
        h = 100;
        ++exponent;
    }
    hundredths_ = sign * h;
    exponent_ = exponent;
}

Magnitude Magnitude::zero(Unit unit)
{
    return Magnitude(0, 0, std::move(unit));
}

Magnitude Magnitude::from_log10(long double l, Unit unit)
{
    const long double e = std::floor(l);
    return Magnitude(static_cast<double>(std::pow(10.0L, l - e)), static_cast<int>(e), std::move(unit));
}

long double Magnitude::log10() const
{
    if (hundredths_ == 0)
        throw std::domain_error("log10 of a zero magnitude");
    return std::log10(static_cast<long double>(std::labs(hundredths_))) - 2 + exponent_;
}

mpq_class Magnitude::exact() const
{
    mpq_class q(hundredths_, 100);
    if (exponent_ >= 0)
        q *= mpq_class(pow10(exponent_));
    else
        q /= mpq_class(pow10(-exponent_));
    q.canonicalize();
    return q;
}

Magnitude Magnitude::operator*(const Magnitude& o) const
{
    const double m = static_cast<double>(hundredths_) * static_cast<double>(o.hundredths_) / 10000.0;
    return Magnitude(m, exponent_ + o.exponent_, unit_ * o.unit_);
}

Magnitude Magnitude::operator/(const Magnitude& o) const
{
    if (o.is_zero())
        throw std::domain_error("division by a zero magnitude");
    const double m = static_cast<double>(hundredths_) / static_cast<double>(o.hundredths_);
    return Magnitude(m, exponent_ - o.exponent_, unit_ / o.unit_);
}

Magnitude Magnitude::operator+(const Magnitude& o) const
{
    if (unit_ != o.unit_)
        throw UnitError("cannot add " + unit_.to_string() + " and " + o.unit_.to_string());
    return from_exact(exact() + o.exact(), unit_);
}

Magnitude Magnitude::pow(int k) const
{
    if (is_zero()) {
        if (k <= 0)
            throw std::domain_error("non-positive power of zero");
        return zero(unit_.pow(k));
    }
    Magnitude out = from_log10(log10() * k, unit_.pow(k));
    if (sign() < 0 && k % 2 != 0)
        out.hundredths_ = -out.hundredths_;
    return out;
}

Magnitude Magnitude::root(int k) const
{
    if (k <= 0)
        throw std::invalid_argument("root order must be positive");
    if (sign() < 0)
        throw std::domain_error("root of a negative magnitude");
    if (is_zero())
        return zero(unit_.root(k));
    return from_log10(log10() / k, unit_.root(k));
}

Magnitude Magnitude::with_unit(Unit u) const
{
    Magnitude out = *this;
    out.unit_ = std::move(u);
    return out;
}

std::string Magnitude::number_string() const
{
    if (hundredths_ == 0)
        return "0";
    const long a = std::labs(hundredths_);
    std::string digits = std::to_string(a / 100);
    const long frac = a % 100;
    if (frac != 0) {
        digits += '.';
        digits += static_cast<char>('0' + frac / 10);
        if (frac % 10)
            digits += static_cast<char>('0' + frac % 10);
    }
    return (hundredths_ < 0 ? "-" : "") + digits + "e" + std::to_string(exponent_);
}

std::string Magnitude::to_string() const
{
    return unit_.dimensionless() ? number_string() : number_string() + " " + unit_.to_string();
}

// ---- constants ----

CosmoConstants CosmoConstants::defaults()
{
    const Unit cm = Unit::of("cm");
    const Unit g = Unit::of("g");
    const Unit eV = Unit::of("eV");
    CosmoConstants c;
    c.proton_wavelength = Magnitude(1.32141, -13, cm);
    c.cosmic_radius = Magnitude(1.32141, 27, cm);
    c.proton_electron_ratio = Magnitude(1.836, 3);
    c.proton_energy = Magnitude(1, 9, eV);
    c.universe_mass = Magnitude(1, 55, g);
    c.proton_mass = Magnitude(1, -24, g);
    c.planck_mass = Magnitude(1, -5, g);
    c.planck_length = Magnitude(1.616, -33, cm);
    c.hbar_c = Magnitude(1.97327, -5, eV * cm);
    return c;
}

namespace {

struct Field {
    const char* name;
    Magnitude CosmoConstants::*member;
    const char* unit;
};

constexpr Field fields[] = {
    {"cosmic_radius", &CosmoConstants::cosmic_radius, "cm"},
    {"proton_compton_wavelength", &CosmoConstants::proton_wavelength, "cm"},
    {"proton_electron_mass_ratio", &CosmoConstants::proton_electron_ratio, "1"},
    {"proton_rest_energy", &CosmoConstants::proton_energy, "eV"},
    {"universe_mass", &CosmoConstants::universe_mass, "g"},
    {"proton_mass", &CosmoConstants::proton_mass, "g"},
    {"planck_mass", &CosmoConstants::planck_mass, "g"},
    {"planck_length", &CosmoConstants::planck_length, "cm"},
    {"hbar_c", &CosmoConstants::hbar_c, "cm*eV"},
};

/// Rewrites a magnitude into cm, g and eV.
Magnitude to_base_units(const Magnitude& m)
{
    static const std::map<std::string, std::pair<std::string, int>> scale{
        {"cm", {"cm", 0}},  {"m", {"cm", 2}},    {"km", {"cm", 5}},  {"g", {"g", 0}},   {"kg", {"g", 3}},
        {"eV", {"eV", 0}},  {"keV", {"eV", 3}},  {"MeV", {"eV", 6}}, {"GeV", {"eV", 9}},
    };
    Unit base;
    int shift = 0;
    for (const auto& [symbol, power] : m.unit().powers()) {
        auto it = scale.find(symbol);
        if (it == scale.end())
            throw UnitError("unknown unit symbol '" + symbol + "'");
        base = base * Unit::of(it->second.first).pow(power);
        shift += it->second.second * power;
    }
    return Magnitude(m.mantissa(), m.exponent() + shift, base);
}

}  // namespace

void CosmoConstants::validate() const
{
    for (const auto& f : fields) {
        const Magnitude& m = this->*f.member;
        if (m.sign() <= 0)
            throw std::invalid_argument(std::string("constant ") + f.name + " must be positive");
        if (m.unit() != Unit::parse(f.unit))
            throw UnitError(std::string("constant ") + f.name + " must be in " + f.unit + ", got " +
                            m.unit().to_string());
    }
}

CosmoConstants parse_constants(const std::string& json_text)
{
    CosmoConstants c = CosmoConstants::defaults();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("constants: malformed JSON: ") + e.what());
    }
    if (doc.is_object() && doc.contains("constants"))
        doc = doc["constants"];
    if (!doc.is_array())
        throw std::invalid_argument("constants: expected a list of {name, mantissa, exponent, unit}");
    for (const auto& entry : doc) {
        if (!entry.is_object() || !entry.contains("name") || !entry.contains("mantissa") ||
            !entry.contains("exponent") || !entry.contains("unit"))
            throw std::invalid_argument("constants: every entry needs name, mantissa, exponent and unit");
        if (!entry["name"].is_string() || !entry["mantissa"].is_number() || !entry["exponent"].is_number_integer() ||
            !entry["unit"].is_string())
            throw std::invalid_argument("constants: wrong field type in " + entry.dump());
        const std::string name = entry["name"].get<std::string>();
        const Field* field = nullptr;
        for (const auto& f : fields) {
            if (name == f.name)
                field = &f;
        }
        if (!field)
            throw std::invalid_argument("constants: unknown name '" + name + "'");
        Magnitude raw(entry["mantissa"].get<double>(), entry["exponent"].get<int>(),
                      Unit::parse(entry["unit"].get<std::string>()));
        c.*(field->member) = to_base_units(raw);
    }
    c.validate();
    return c;
}

CosmoConstants load_constants(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("constants: cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_constants(ss.str());
}

// ---- estimates ----

Magnitude ur_count(const Magnitude& R, const Magnitude& lambda)
{
    require_unit(lambda, R.unit(), "ur_count");
    return R / lambda;
}

Magnitude total_urs(const Magnitude& R, const Magnitude& lambda_p)
{
    return ur_count(R, lambda_p).pow(3);
}

Magnitude ur_energy(const Magnitude& R, const Magnitude& hbar_c)
{
    require_unit(R, Unit::of("cm"), "ur_energy");
    require_unit(hbar_c, Unit::parse("cm*eV"), "ur_energy conversion");
    return hbar_c / R;
}

Magnitude uncertainty_size(const Magnitude& E, const Magnitude& hbar_c)
{
    require_unit(E, Unit::of("eV"), "uncertainty_size");
    require_unit(hbar_c, Unit::parse("cm*eV"), "uncertainty_size conversion");
    return hbar_c / E;
}

PhotonNumbers photon_numbers(const Magnitude& N, const Magnitude& z_p)
{
    require_unit(N, dimensionless(), "photon_numbers");
    PhotonNumbers out;
    out.n_ph = N.root(4);
    out.z_ph = N / out.n_ph;
    out.ratio = out.z_ph / z_p;
    return out;
}

BekensteinForms bekenstein_forms(const Magnitude& M, const Magnitude& m, const Magnitude& m0)
{
    require_unit(m, M.unit(), "bekenstein");
    require_unit(m0, M.unit(), "bekenstein");
    const mpq_class big = M.exact();
    const mpq_class small = m.exact();
    const mpq_class unit2 = m0.exact() * m0.exact();
    const mpq_class difference = 4 * ((big + small) * (big + small) - big * big) / unit2;
    const mpq_class product = 8 * big * small / unit2;
    BekensteinForms out;
    out.difference_form = sgn(difference) == 0 ? Magnitude::zero() : times_pi(from_exact(difference, {}));
    out.product_form = sgn(product) == 0 ? Magnitude::zero() : times_pi(from_exact(product, {}));
    return out;
}

Magnitude bekenstein_delta(const Magnitude& M, const Magnitude& m, const Magnitude& m0)
{
    return bekenstein_forms(M, m, m0).product_form;
}

Magnitude lambda_estimate(const Magnitude& R)
{
    require_unit(R, Unit::of("cm"), "lambda_estimate");
    return R.pow(-2);
}

Magnitude lambda_planck_units(const Magnitude& R, const Magnitude& planck_length)
{
    require_unit(planck_length, R.unit(), "lambda_planck_units");
    return (planck_length / R).pow(2);
}

std::string_view status_name(RowStatus s)
{
    switch (s) {
    case RowStatus::pass:
        return "pass";
    case RowStatus::fail:
        return "fail";
    case RowStatus::flagged:
        return "flagged";
    case RowStatus::info:
        return "info";
    }
    return "?";
}

std::vector<CosmoRow> cosmo_table(const CosmoConstants& c)
{
    c.validate();
    const Unit eV = Unit::of("eV");
    const Unit cm = Unit::of("cm");

    const Magnitude n_p = ur_count(c.cosmic_radius, c.proton_wavelength);
    const Magnitude n_e = n_p / c.proton_electron_ratio;
    const Magnitude N = total_urs(c.cosmic_radius, c.proton_wavelength);
    const Magnitude z_p = N / n_p;
    const Magnitude E0 = ur_energy(c.cosmic_radius, c.hbar_c);
    const Magnitude U = N * E0;
    const Magnitude U_nucleons = z_p * c.proton_energy;
    const PhotonNumbers ph = photon_numbers(N, z_p);
    const Magnitude dS = bekenstein_delta(c.universe_mass, c.proton_mass, c.planck_mass);
    const Magnitude lambda_cm = lambda_estimate(c.cosmic_radius);
    const Magnitude lambda_pl = lambda_planck_units(c.cosmic_radius, c.planck_length);
    const Magnitude dx_proton = uncertainty_size(c.proton_energy, c.hbar_c);
    const Magnitude dx_ur = uncertainty_size(E0, c.hbar_c);

    std::vector<CosmoRow> rows;
    auto row = [&](std::string quantity, const Magnitude& computed, const Magnitude& quoted, std::optional<int> tol,
                   RowStatus untoleranced, std::string note = {}) {
        CosmoRow r;
        r.quantity = std::move(quantity);
        r.computed = computed;
        r.quoted_value = quoted;
        r.decade_difference = round2(computed.log10() - quoted.log10());
        r.exponent_difference = computed.exponent() - quoted.exponent();
        r.tolerance = tol;
        if (tol)
            r.status = std::abs(r.exponent_difference) <= *tol ? RowStatus::pass : RowStatus::fail;
        else if (untoleranced == RowStatus::flagged)
            r.status = std::abs(r.exponent_difference) > 1 ? RowStatus::flagged : RowStatus::pass;
        else
            r.status = untoleranced;
        r.note = std::move(note);
        rows.push_back(std::move(r));
    };

    row("n_p", n_p, Magnitude(1, 40), 1, RowStatus::info, "R / lambda_p");
    row("n_e", n_e, Magnitude(1, 38), std::nullopt, RowStatus::flagged, "n_p / (m_p / m_e)");
    row("N", N, Magnitude(1, 120), 1, RowStatus::info, "R^3 / lambda_p^3");
    row("z_p", z_p, Magnitude(1, 80), 1, RowStatus::info, "N / n_p");
    row("E_0", E0, Magnitude(1, -32, eV), 1, RowStatus::info, "hbar c / R");
    row("U", U, Magnitude(1, 88, eV), 1, RowStatus::info, "N * E_0");
    row("U_nucleons", U_nucleons, Magnitude(1, 88, eV), 1, RowStatus::info, "z_p * E_p");
    row("n_ph", ph.n_ph, Magnitude(1, 30), 1, RowStatus::info, "N^(1/4)");
    row("z_ph", ph.z_ph, Magnitude(1, 90), 1, RowStatus::info, "N / n_ph");
    row("z_ph/z_p", ph.ratio, Magnitude(1, 10), 1, RowStatus::info, "photon-baryon ratio");
    row("dS_max", dS, Magnitude(1, 41), 1, RowStatus::info, "8 pi M_u m_p / m_0^2");
    row("Lambda_cm", lambda_cm, Magnitude(1, -120, cm.pow(-2)), std::nullopt, RowStatus::info, "1 / R^2 in cm^-2");
    row("Lambda_planck", lambda_pl, Magnitude(1, -120), 1, RowStatus::info, "(l_P / R)^2");
    row("dx(E_p)", dx_proton, c.proton_wavelength, 1, RowStatus::info, "hbar c / E_p against lambda_p");
    row("dx(E_0)", dx_ur, c.cosmic_radius, 1, RowStatus::info, "hbar c / E_0 against R");
    return rows;
}

bool table_passes(const std::vector<CosmoRow>& rows)
{
    for (const auto& r : rows) {
        if (r.status == RowStatus::fail)
            return false;
    }
    return true;
}

}  // namespace parafock::cosmo
