#include "parafock/cli.hpp"

#include "parafock/conformal.hpp"
#include "parafock/cosmo.hpp"
#include "parafock/fock.hpp"
#include "parafock/states.hpp"
#include "parafock/young.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace parafock::cli {

using nlohmann::json;

namespace {

std::string gr_string(const GaussianRational& z)
{
    return z.to_string();
}

void append(SuiteReport& out, const Report& r, const std::string& prefix)
{
    for (const auto& c : r.checks)
        out.records.push_back({prefix + c.id, c.pass, c.detail});
}

fock::ModeConfig mode_config(int R, int p, int n_max)
{
    fock::ModeConfig cfg{R, p, n_max};
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

std::shared_ptr<const fock::ParaboseAlgebra> make_algebra(const fock::ModeConfig& cfg)
{
    try {
        return std::make_shared<const fock::ParaboseAlgebra>(cfg);
    } catch (const fock::BasisTooLarge& e) {
        throw UsageError(e.what());
    }
}

json config_json(const fock::ModeConfig& cfg, std::size_t basis_size)
{
    return {{"R", cfg.sorts},
            {"p", cfg.order},
            {"nmax", cfg.max_urs},
            {"basis_size", basis_size},
            {"two_or_four_sorts", cfg.standard_sort_count()}};
}

// ---- verify ----

json closure_json(const conformal::ClosureTable& t)
{
    json rows = json::array();
    for (const auto& r : t.rows) {
        json row{{"pair", "[" + std::string(conformal::name(r.a)) + "," + std::string(conformal::name(r.b)) + "]"},
                 {"expansion", conformal::format_expansion(r.coefficients)}};
        if (r.coefficients) {
            json coeffs = json::object();
            for (std::size_t k = 0; k < r.coefficients->size(); ++k) {
                if (!(*r.coefficients)[k].is_zero())
                    coeffs[std::string(conformal::closure_column_name(k))] = gr_string((*r.coefficients)[k]);
            }
            row["coefficients"] = coeffs;
        } else {
            row["coefficients"] = nullptr;
        }
        rows.push_back(row);
    }
    return {{"depth", t.depth}, {"family_rank", t.family_rank}, {"rows", rows}};
}

void verify_green(const fock::ParaboseAlgebra& alg, int depth, SuiteReport& out)
{
    Report r = fock::verify_green_relations(alg, depth);
    append(out, r, "green ");
    out.text += r.name + ": " + std::to_string(r.checks.size() - r.failures()) + "/" + std::to_string(r.checks.size()) +
                " relations hold on interior(" + std::to_string(depth) + ")\n";
    out.data["green"] = {{"depth", depth}, {"relations", r.checks.size()}, {"failures", r.failures()}};
}

void verify_closure(const conformal::GeneratorSet& g, int depth, unsigned threads, const RunConfig& config,
                    SuiteReport& out)
{
    const auto table = conformal::closure_table(g, depth, threads);
    for (const auto& r : table.rows) {
        out.records.push_back({"closure [" + std::string(conformal::name(r.a)) + "," +
                                   std::string(conformal::name(r.b)) + "]",
                               r.coefficients.has_value(), conformal::format_expansion(r.coefficients)});
    }
    out.text += table.to_text();
    out.data["closure"] = closure_json(table);
    if (!config.table_path.empty()) {
        std::ofstream f(config.table_path);
        if (!f)
            throw UsageError("cannot write closure table to '" + config.table_path + "'");
        if (config.format == Format::json)
            f << json{{"schema", 1}, {"closure", closure_json(table)}}.dump(2) << "\n";
        else
            f << table.to_text();
    }
}

void verify_jacobi(const conformal::GeneratorSet& g, int depth, conformal::TripleSelection sel, unsigned threads,
                   SuiteReport& out)
{
    Report r = conformal::jacobi_check(g, depth, sel, threads);
    append(out, r, "jacobi ");
    out.text += r.name + ": " + std::to_string(r.checks.size() - r.failures()) + "/" + std::to_string(r.checks.size()) +
                " triples vanish on interior(" + std::to_string(depth) + ")\n";
    out.data["jacobi"] = {{"depth", depth}, {"triples", r.checks.size()}, {"failures", r.failures()}};
}

// ---- state ----

json residual_json(const states::ResidualReport& rep)
{
    json conditions = json::array();
    for (const auto& c : rep.conditions) {
        json shells = json::array();
        for (const auto& s : c.shells)
            shells.push_back({{"n", s.n}, {"residual_component_count", s.residual_component_count}});
        conditions.push_back({{"condition", c.condition},
                              {"shells", shells},
                              {"interior_clean", c.interior_clean},
                              {"verdict", states::verdict_name(c.verdict)},
                              {"recorded_constant", c.recorded_constant ? json(gr_string(*c.recorded_constant))
                                                                         : json(nullptr)}});
    }
    return {{"exact_through", rep.exact_through},
            {"boundary_width", rep.boundary_width},
            {"checked_through", rep.checked_through},
            {"conditions", conditions}};
}

std::string residual_text(const states::ResidualReport& rep)
{
    std::ostringstream os;
    os << "exact through shell " << rep.exact_through << ", boundary width " << rep.boundary_width
       << ", checked shells <= " << rep.checked_through << "\n";
    for (const auto& c : rep.conditions) {
        os << "  " << c.condition << ": " << states::verdict_name(c.verdict);
        if (c.recorded_constant)
            os << " (c = " << c.recorded_constant->to_string() << ")";
        os << "; residual shells {";
        for (std::size_t k = 0; k < c.shells.size(); ++k)
            os << (k ? ", " : "") << c.shells[k].n << ":" << c.shells[k].residual_component_count;
        os << "}\n";
    }
    return os.str();
}

std::string shells_text(const std::set<int>& shells)
{
    std::string out;
    for (int n : shells)
        out += (out.empty() ? "" : " ") + std::to_string(n);
    return out;
}

// ---- cosmo ----

json magnitude_json(const cosmo::Magnitude& m)
{
    return {{"mantissa", m.mantissa()}, {"exponent", m.exponent()}, {"unit", m.unit().to_string()}};
}

}  // namespace

bool SuiteReport::pass() const
{
    return std::all_of(records.begin(), records.end(), [](const CheckRecord& c) { return c.pass; });
}

SuiteReport cmd_verify(const RunConfig& config)
{
    const std::string& suite = config.suite;
    if (suite != "green" && suite != "closure" && suite != "jacobi" && suite != "all")
        throw UsageError("--suite must be one of green, closure, jacobi, all");
    conformal::TripleSelection sel;
    if (config.triples == "all")
        sel = conformal::TripleSelection::all;
    else if (config.triples == "sample")
        sel = conformal::TripleSelection::sample;
    else
        throw UsageError("--triples must be all or sample");

    const auto cfg = mode_config(config.R, config.p, config.n_max.value_or(8));
    const bool needs_conformal = suite != "green";
    if (needs_conformal && cfg.sorts != 4 && suite != "all")
        throw UsageError("suite " + suite + " needs --R 4");
    if (config.depth && *config.depth < 0)
        throw UsageError("--depth must be >= 0");

    const auto alg = make_algebra(cfg);
    SuiteReport out;
    out.suite = "verify:" + suite;
    out.data["config"] = config_json(cfg, alg->basis().size());
    out.text = "verify " + suite + " R=" + std::to_string(cfg.sorts) + " p=" + std::to_string(cfg.order) +
               " nmax=" + std::to_string(cfg.max_urs) + " basis=" + std::to_string(alg->basis().size()) + "\n";
    if (!cfg.standard_sort_count())
        out.text += "note: R = " + std::to_string(cfg.sorts) + " is neither 2 (urs) nor 4 (urs and anti-urs)\n";

    try {
        const int depth = config.depth.value_or(suite == "jacobi" ? 6 : 4);
        if (suite == "green" || suite == "all")
            verify_green(*alg, depth, out);
        if (suite != "green" && cfg.sorts == 4) {
            const auto g = conformal::build_generators(alg);
            if (suite == "closure" || suite == "all")
                verify_closure(g, depth, config.threads, config, out);
            if (suite == "jacobi" || suite == "all")
                verify_jacobi(g, suite == "all" ? std::max(depth + 2, 6) : depth, sel, config.threads, out);
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return out;
}

SuiteReport cmd_tableaux(const RunConfig& config)
{
    const int n = config.n;
    const int R = config.R;
    if (n < 1 || n > 12)
        throw UsageError("--n must lie in 1..12");
    if (R < 1)
        throw UsageError("--r must be >= 1");

    SuiteReport out;
    out.suite = "tableaux";
    std::ostringstream text;
    text << "Young diagrams of n=" << n << ", schemes over R=" << R << "\n";

    const auto diagrams = young::enumerate_diagrams(n);
    std::uint64_t sum_f2 = 0;
    std::uint64_t sum_fs = 0;
    json list = json::array();
    // Tensors are listed only where the symmetrizer stays cheap.
    const bool list_tensors = n <= 6;
    for (const auto& d : diagrams) {
        const std::uint64_t f = young::count_standard_tableaux(d);
        const auto schemes = young::enumerate_schemes(d, R);
        sum_f2 += f * f;
        sum_fs += f * schemes.size();
        text << d.to_string() << ": f=" << f << ", schemes=" << schemes.size() << "\n";
        json entry{{"shape", d.rows()}, {"f", f}, {"schemes", json::array()}};
        std::vector<young::StandardTableau> tableaux;
        if (list_tensors && !schemes.empty())
            tableaux = young::enumerate_standard_tableaux(d);
        for (const auto& s : schemes) {
            json sj{{"filling", young::filling_to_string(s.filling)}, {"content", s.content().to_string()}};
            text << "  scheme " << young::filling_to_string(s.filling);
            if (list_tensors) {
                json tensors = json::array();
                for (const auto& t : tableaux) {
                    const auto tensor = young::scheme_tensor(t, s);
                    tensors.push_back({{"tableau", young::filling_to_string(t.filling)}, {"tensor", tensor.to_string()}});
                    text << "\n    " << young::filling_to_string(t.filling) << " -> " << tensor.to_string();
                }
                sj["tensors"] = tensors;
            }
            text << "\n";
            entry["schemes"].push_back(sj);
        }
        list.push_back(entry);
    }
    std::uint64_t factorial = 1;
    for (int k = 2; k <= n; ++k)
        factorial *= static_cast<std::uint64_t>(k);
    std::uint64_t words = 1;
    bool words_fit = true;
    for (int k = 0; k < n && words_fit; ++k) {
        if (words > UINT64_MAX / static_cast<std::uint64_t>(R))
            words_fit = false;
        else
            words *= static_cast<std::uint64_t>(R);
    }
    text << "sum f^2 = " << sum_f2 << ", n! = " << factorial << "\n";
    out.records.push_back({"sum f^2 = n!", sum_f2 == factorial,
                           "sum=" + std::to_string(sum_f2) + " n!=" + std::to_string(factorial)});
    if (words_fit) {
        text << "sum f*schemes = " << sum_fs << ", R^n = " << words << "\n";
        out.records.push_back({"sum f*schemes = R^n", sum_fs == words,
                               "sum=" + std::to_string(sum_fs) + " R^n=" + std::to_string(words)});
    }
    if (n == 3 && R >= 2) {
        Report dep = young::formal_dependence_check();
        append(out, dep, "");
    }
    out.text = text.str();
    out.data = {{"n", n}, {"R", R}, {"diagrams", list}, {"sum_f_squared", sum_f2}, {"n_factorial", factorial}};
    return out;
}

SuiteReport cmd_state(const RunConfig& config)
{
    states::StateKind kind;
    if (config.kind == "vacuum")
        kind = states::StateKind::vacuum;
    else if (config.kind == "zeron")
        kind = states::StateKind::zeron;
    else if (config.kind == "neutrino")
        kind = states::StateKind::neutrino;
    else
        throw UsageError("--kind must be vacuum, zeron or neutrino");
    if (config.K < 0 || config.K_prime < 0)
        throw UsageError("--K and --Kprime must be >= 0");
    mpq_class eps;
    try {
        eps = parse_rational(config.epsilon);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--epsilon: ") + e.what());
    }

    const bool particle = kind != states::StateKind::vacuum;
    const int default_nmax = particle ? 2 * (config.K + config.K_prime) : 2 * config.K + 4;
    const auto cfg = mode_config(4, config.p, config.n_max.value_or(std::max(default_nmax, 1)));
    const int boundary = config.boundary_width.value_or(particle ? 2 : 4);

    SuiteReport out;
    out.suite = "state:" + config.kind;
    try {
        const auto alg = make_algebra(cfg);
        const auto ops = conformal::build_poincare(conformal::build_generators(alg));
        states::TruncatedSeriesState st = states::lorentz_vacuum(*alg, config.K);
        if (particle)
            st = states::zeron(*alg, st, eps, config.K_prime);
        if (kind == states::StateKind::neutrino)
            st = states::neutrino(*alg, st);
        const auto rep = states::check_invariance(st, ops, boundary);

        std::ostringstream text;
        text << "state " << config.kind << " K=" << config.K;
        if (particle)
            text << " K'=" << config.K_prime << " eps=" << rational_to_string(eps);
        text << " R=4 p=" << cfg.order << " nmax=" << cfg.max_urs << " basis=" << alg->basis().size() << "\n";
        text << "components=" << st.vector.size() << " shell support {" << shells_text(st.shell_support()) << "}\n";

        json data{{"config", config_json(cfg, alg->basis().size())},
                  {"kind", config.kind},
                  {"K", config.K},
                  {"components", st.vector.size()},
                  {"shell_support", st.shell_support()}};
        if (particle) {
            data["Kprime"] = config.K_prime;
            data["epsilon"] = rational_to_string(eps);
        }

        if (kind == states::StateKind::vacuum) {
            for (int mu = 0; mu <= config.K; ++mu) {
                for (int lambda = 0; mu + lambda <= config.K; ++lambda) {
                    const auto want = states::lorentz_vacuum_coefficient(mu, lambda);
                    const auto got = states::vacuum_term_coefficient(*alg, st, mu, lambda);
                    out.records.push_back({"coefficient(" + std::to_string(mu) + "," + std::to_string(lambda) + ")",
                                           got && *got == want,
                                           "expected " + want.to_string() + ", got " +
                                               (got ? got->to_string() : std::string("non-proportional"))});
                }
            }
        }
        if (kind == states::StateKind::neutrino)
            out.records.push_back({"state is nonzero", !st.vector.empty(), std::to_string(st.vector.size()) + " components"});
        for (const auto& c : rep.conditions) {
            std::string detail(states::verdict_name(c.verdict));
            if (c.recorded_constant)
                detail += ", c = " + c.recorded_constant->to_string();
            if (!c.interior_clean && !c.shells.empty())
                detail += ", lowest residual shell " + std::to_string(c.shells.front().n);
            out.records.push_back({c.condition, c.interior_clean, detail});
        }
        text << residual_text(rep);
        data["residuals"] = residual_json(rep);
        out.text = text.str();
        out.data = data;
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return out;
}

SuiteReport cmd_cosmo(const RunConfig& config)
{
    cosmo::CosmoConstants constants;
    try {
        constants = config.constants_path.empty() ? cosmo::CosmoConstants::defaults()
                                                  : cosmo::load_constants(config.constants_path);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto rows = cosmo::cosmo_table(constants);

    SuiteReport out;
    out.suite = "cosmo";
    std::ostringstream text;
    text << "quantity        computed             quoted               decades  exp.diff  tol  status\n";
    json list = json::array();
    for (const auto& r : rows) {
        char line[200];
        std::snprintf(line, sizeof line, "%-15s %-20s %-20s %7.2f  %8d  %3s  %s\n", r.quantity.c_str(),
                      r.computed.to_string().c_str(), r.quoted_value.to_string().c_str(), r.decade_difference,
                      r.exponent_difference, r.tolerance ? std::to_string(*r.tolerance).c_str() : "-",
                      std::string(cosmo::status_name(r.status)).c_str());
        text << line;
        list.push_back({{"quantity", r.quantity},
                        {"computed", magnitude_json(r.computed)},
                        {"quoted_value", magnitude_json(r.quoted_value)},
                        {"decade_difference", r.decade_difference},
                        {"exponent_difference", r.exponent_difference},
                        {"tolerance", r.tolerance ? json(*r.tolerance) : json(nullptr)},
                        {"status", cosmo::status_name(r.status)},
                        {"note", r.note}});
        if (r.status != cosmo::RowStatus::info) {
            std::string detail = r.computed.to_string() + " vs " + r.quoted_value.to_string();
            if (r.status == cosmo::RowStatus::flagged)
                detail += " (flagged: exponent gap " + std::to_string(r.exponent_difference) + ")";
            out.records.push_back({r.quantity, r.status != cosmo::RowStatus::fail, detail});
        }
    }
    const auto forms = cosmo::bekenstein_forms(constants.universe_mass, constants.proton_mass, constants.planck_mass);
    text << "4 pi ((M+m)^2 - M^2) = " << forms.difference_form.to_string() << ", 8 pi M m = "
         << forms.product_form.to_string() << "\n";
    out.records.push_back({"entropy forms agree", forms.difference_form == forms.product_form,
                           forms.difference_form.to_string() + " vs " + forms.product_form.to_string()});
    out.text = text.str();
    out.data = {{"rows", list}};
    return out;
}

std::string render_text(const SuiteReport& report)
{
    std::ostringstream os;
    os << report.text;
    for (const auto& c : report.records) {
        os << (c.pass ? "PASS " : "FAIL ") << c.id;
        if (!c.detail.empty())
            os << ": " << c.detail;
        os << "\n";
    }
    const auto failed = std::count_if(report.records.begin(), report.records.end(), [](auto& c) { return !c.pass; });
    os << report.suite << ": " << (report.pass() ? "pass" : "FAIL") << " (" << report.records.size() - failed << "/"
       << report.records.size() << " checks)\n";
    if (report.seconds) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "time: %.3f s\n", *report.seconds);
        os << buf;
    }
    return os.str();
}

std::string render_json(const SuiteReport& report)
{
    json checks = json::array();
    for (const auto& c : report.records)
        checks.push_back({{"id", c.id}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
    json doc{{"schema", 1}, {"suite", report.suite}, {"pass", report.pass()}, {"checks", checks}, {"data", report.data}};
    if (report.seconds)
        doc["timing_seconds"] = *report.seconds;
    return doc.dump(2) + "\n";
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact parabose Fock-space verification engine"};
    app.require_subcommand(1);
    RunConfig config;
    std::string format = "text";
    bool json_flag = false;
    int verify_R = 4;
    int tableaux_r = 2;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--json", json_flag, "Shorthand for --format json");
        sub->add_option("--output,-o", config.output_path, "Write the report to this file");
        sub->add_flag("--timing", config.timing, "Include wall-clock time in the report");
    };

    auto* verify = app.add_subcommand("verify", "Green relations, generator closure and Jacobi identities");
    verify->add_option("--suite", config.suite, "green | closure | jacobi | all")->capture_default_str();
    verify->add_option("--R", verify_R, "Number of ur sorts")->capture_default_str();
    verify->add_option("--p", config.p, "Parabose order")->capture_default_str();
    verify->add_option("--nmax", config.n_max, "Total ur-number cutoff (default 8)");
    verify->add_option("--depth", config.depth, "Interior depth (default 4; 6 for jacobi)");
    verify->add_option("--triples", config.triples, "Jacobi triples: all | sample")->capture_default_str();
    verify->add_option("--threads", config.threads, "Worker threads")->capture_default_str();
    verify->add_option("--table", config.table_path, "Also write the closure table to this file");
    common(verify);

    auto* tableaux = app.add_subcommand("tableaux", "Young diagrams, standard tableaux, schemes and tensors");
    tableaux->add_option("--n", config.n, "Number of boxes (1..12)")->capture_default_str();
    tableaux->add_option("--r", tableaux_r, "Number of sorts for schemes")->capture_default_str();
    common(tableaux);

    auto* state = app.add_subcommand("state", "Build a truncated state and check its conditions");
    state->add_option("--kind", config.kind, "vacuum | zeron | neutrino")->capture_default_str();
    state->add_option("--K", config.K, "Lorentz-vacuum series cutoff")->capture_default_str();
    state->add_option("--Kprime", config.K_prime, "Zeron series cutoff")->capture_default_str();
    state->add_option("--epsilon", config.epsilon, "Exact rational a/b")->capture_default_str();
    state->add_option("--nmax", config.n_max, "Total ur-number cutoff");
    state->add_option("--p", config.p, "Parabose order")->capture_default_str();
    state->add_option("--boundary", config.boundary_width, "Boundary width (default 4 vacuum, 2 particles)");
    common(state);

    auto* cosmo_cmd = app.add_subcommand("cosmo", "Order-of-magnitude estimates against quoted values");
    cosmo_cmd->add_option("--constants", config.constants_path, "JSON constants file");
    common(cosmo_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    config.format = (json_flag || format == "json") ? Format::json : Format::text;

    SuiteReport report;
    try {
        const auto start = std::chrono::steady_clock::now();
        if (verify->parsed()) {
            config.subcommand = "verify";
            config.R = verify_R;
            report = cmd_verify(config);
        } else if (tableaux->parsed()) {
            config.subcommand = "tableaux";
            config.R = tableaux_r;
            report = cmd_tableaux(config);
        } else if (state->parsed()) {
            config.subcommand = "state";
            report = cmd_state(config);
        } else {
            config.subcommand = "cosmo";
            report = cmd_cosmo(config);
        }
        if (config.timing)
            report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const std::string rendered = config.format == Format::json ? render_json(report) : render_text(report);
    if (config.output_path.empty()) {
        out << rendered;
    } else {
        std::ofstream f(config.output_path);
        if (!f) {
            err << "error: cannot write '" << config.output_path << "'\n";
            return 2;
        }
        f << rendered;
    }
    return report.pass() ? 0 : 1;
}

}  // namespace parafock::cli
