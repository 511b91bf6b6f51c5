#include "cli.hpp"

#include "sc/ed.hpp"
#include "sc/effective.hpp"
#include "sc/identities.hpp"
#include "sc/phase.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sc::cli {

namespace {

using Json = nlohmann::ordered_json;

// Malformed values found after CLI11 has accepted the option text.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A check that ran to completion and failed.
struct Outcome {
    bool passed = true;
};

Rational rational_option(const std::string& name, const std::string& text)
{
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument&) {
        throw ConfigError("--" + name + ": '" + text + "' is not a rational number");
    }
}

std::map<std::string, Rational> assignments(const std::string& option, const std::vector<std::string>& items)
{
    std::map<std::string, Rational> out;
    for (const auto& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw ConfigError("--" + option + ": expected name=value, got '" + item + "'");
        out[item.substr(0, eq)] = rational_option(option, item.substr(eq + 1));
    }
    return out;
}

Json exact(const Rational& r) { return Json{{"exact", to_string(r)}, {"float", to_double(r)}}; }

Json exact(const ScalarValue& v)
{
    Json j{{"exact", v.str()}};
    if (v.is_rational()) j["float"] = to_double(v.as_rational());
    return j;
}

// Replaces the positional indices of a spin-string label by site names.
std::string named_label(const std::string& label, const std::vector<std::string>& sites)
{
    std::string out;
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (label[i] == '(') {
            auto close = label.find(')', i);
            int index = std::stoi(label.substr(i + 1, close - i - 1));
            out += "(" + (index < static_cast<int>(sites.size()) ? sites[static_cast<std::size_t>(index)] : std::to_string(index)) + ")";
            i = close;
        } else {
            out += label[i];
        }
    }
    return out;
}

Json coefficients(const SpinPolynomial& p, const std::vector<std::string>& sites)
{
    Json arr = Json::array();
    for (const auto& [s, c] : p.terms()) arr.push_back(Json{{"operator", named_label(SpinPolynomial::label(s), sites)}, {"coefficient", exact(c)}});
    return arr;
}

// Left-aligned columns separated by two spaces.
class Table {
public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void print(std::ostream& os) const
    {
        std::vector<std::size_t> width;
        for (const auto& r : rows_)
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (width.size() <= i) width.push_back(0);
                width[i] = std::max(width[i], r[i].size());
            }
        for (const auto& r : rows_) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                line += r[i];
                if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
            }
            line.erase(line.find_last_not_of(' ') + 1);
            os << line << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file '" + path + "'");
    f << content;
}

void emit_json(const Json& j, const std::string& path, std::ostream& out)
{
    std::string text = j.dump(2) + "\n";
    if (path == "-")
        out << text;
    else if (!path.empty())
        write_file(path, text);
}

std::string fixed(double v, int digits = 6)
{
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

// ---- derive ---------------------------------------------------------------

struct DeriveOptions {
    std::string model = "one-band-symmetric";
    int order = 2;
    std::vector<std::string> set;
    std::string json;
};

Outcome run_derive(const DeriveOptions& o, std::ostream& out)
{
    ModelChoice choice = parse_model_choice(o.model);
    make_model(choice, choice == ModelChoice::three_band ? "cuo2_bond" : "bond");  // registers the model's symbols
    std::map<int, Rational> bindings;
    Json jb = Json::object();
    for (const auto& [name, value] : assignments("set", o.set)) {
        auto s = find_symbol(name);
        if (!s) throw ConfigError("--set: unknown symbol '" + name + "'");
        bindings[s->index] = value;
        jb[name] = exact(value);
    }
    Derivation d = derive(choice, o.order, bindings);

    Json terms = Json::array();
    Table table({"support", "term", "method", "operator", "coefficient", "verdict"});
    for (const auto& c : d.terms) {
        const auto& sites = c.derived.sites;
        Json j{{"support", c.derived.support},
               {"term", c.derived.term},
               {"method", c.method},
               {"sites", sites},
               {"derived", coefficients(c.derived.coefficients, sites)},
               {"reference", coefficients(c.reference, sites)},
               {"match", c.match}};
        if (c.modulo_constant) j["modulo_constant"] = true;
        if (!c.note.empty()) j["note"] = c.note;
        terms.push_back(j);
        std::string verdict = std::string(c.match ? "match" : "MISMATCH") + (c.modulo_constant ? " (modulo constant)" : "");
        if (c.derived.coefficients.is_zero()) table.add({c.derived.support, c.derived.term, c.method, "-", "0", verdict});
        bool first = true;
        for (const auto& [op, coef] : c.derived.coefficients.terms()) {
            table.add({first ? c.derived.support : "", first ? c.derived.term : "", first ? c.method : "",
                       named_label(SpinPolynomial::label(op), sites), coef.str(), first ? verdict : ""});
            first = false;
        }
    }
    Json scalars = Json::array();
    for (const auto& s : d.scalars) {
        Json j{{"name", s.name}, {"derived", exact(s.derived)}, {"reference", exact(s.reference)}, {"match", s.match}};
        if (!s.note.empty()) j["note"] = s.note;
        scalars.push_back(j);
        table.add({s.name, "", "", "", s.derived.str(), s.match ? "match" : "MISMATCH"});
    }
    const bool ok = d.all_match();
    Json j{{"model", d.model}, {"order", d.order}, {"bindings", jb}, {"terms", terms}, {"scalars", scalars},
           {"verdict", ok ? "match" : "mismatch"}};
    if (o.json == "-") {
        emit_json(j, o.json, out);
    } else {
        out << "model " << d.model << ", order " << d.order << "\n";
        table.print(out);
        for (const auto& c : d.terms)
            if (!c.note.empty()) out << "note (" << c.derived.support << "/" << c.derived.term << "): " << c.note << "\n";
        out << "verdict: " << (ok ? "match" : "mismatch") << "\n";
        emit_json(j, o.json, out);
    }
    return {ok};
}

// ---- validate-ed ----------------------------------------------------------

struct ValidateOptions {
    std::string model = "one-band-symmetric";
    std::string cluster = "bond";
    int order = 2;
    std::vector<std::string> t{"2/5", "1/5", "1/10", "1/20", "1/40"};
    std::vector<std::string> set;
    std::vector<std::string> ratio;
    std::string csv, json;
};

std::map<std::string, Rational> default_values(ModelChoice m)
{
    if (m == ModelChoice::three_band)
        return {{"Ud", Rational(21, 2)}, {"Up", Rational(4)}, {"Upd", Rational(6, 5)}, {"Delta", Rational(18, 5)}};
    return {{"U", Rational(8)}, {"h", Rational(0)}, {"k", Rational(0)}};
}

Outcome run_validate(const ValidateOptions& o, std::ostream& out)
{
    ScalingSetup setup;
    setup.model = parse_model_choice(o.model);
    setup.cluster = o.cluster;
    setup.order = o.order;
    for (const auto& t : o.t) setup.t_values.push_back(rational_option("t", t));
    setup.values = default_values(setup.model);
    for (const auto& [name, v] : assignments("set", o.set)) setup.values[name] = v;
    setup.hopping_ratios = assignments("ratio", o.ratio);
    ScalingReport r = band_scaling_study(setup);

    std::ostringstream csv;
    csv << std::setprecision(17) << "t,residual,band_error\n";
    for (const auto& s : r.samples) csv << s.t << ',' << s.residual << ',' << s.band_error << '\n';
    Json samples = Json::array();
    for (const auto& s : r.samples) samples.push_back(Json{{"t", s.t}, {"residual", s.residual}, {"band_error", s.band_error}});
    Json values = Json::object();
    for (const auto& [name, v] : setup.values) values[name] = exact(v);
    const bool ok = r.residual_ok() && r.band_ok();
    Json j{{"model", r.model},
           {"cluster", r.cluster},
           {"order", r.order},
           {"values", values},
           {"samples", samples},
           {"residual_fit", {{"slope", r.residual_fit.slope}, {"width", r.residual_fit.width}, {"threshold", r.residual_threshold}, {"pass", r.residual_ok()}}},
           {"band_fit", {{"slope", r.band_fit.slope}, {"width", r.band_fit.width}, {"threshold", r.band_threshold}, {"pass", r.band_ok()}}},
           {"verdict", ok ? "pass" : "fail"}};
    if (!o.csv.empty()) write_file(o.csv, csv.str());
    if (o.json == "-") {
        emit_json(j, o.json, out);
    } else {
        out << "model " << r.model << ", cluster " << r.cluster << ", order " << r.order << "\n";
        Table table({"t", "residual", "band_error"});
        for (const auto& s : r.samples) table.add({fixed(s.t), fixed(s.residual), fixed(s.band_error)});
        table.print(out);
        out << "residual slope " << fixed(r.residual_fit.slope, 4) << " ± " << fixed(r.residual_fit.width, 2) << " (need ≥ "
            << fixed(r.residual_threshold, 3) << "): " << (r.residual_ok() ? "pass" : "FAIL") << "\n";
        out << "band error slope " << fixed(r.band_fit.slope, 4) << " ± " << fixed(r.band_fit.width, 2) << " (need ≥ "
            << fixed(r.band_threshold, 3) << "): " << (r.band_ok() ? "pass" : "FAIL") << "\n";
        emit_json(j, o.json, out);
    }
    return {ok};
}

// ---- scan-phase -----------------------------------------------------------

struct ScanOptions {
    int order = 2;
    std::string t = "1/10", U = "7", k = "0";
    std::string cells = "4x4";
    bool rectangular = false;
    std::string h_min, h_max;
    int samples = 101;
    std::string csv, plot, json;
};

Outcome run_scan(const ScanOptions& o, std::ostream& out)
{
    PhaseParameters p{rational_option("t", o.t), rational_option("U", o.U), rational_option("k", o.k)};
    CellBound cells = parse_cell_bound(o.cells);
    cells.rectangular_only = o.rectangular;
    const Rational scale = o.order == 0 ? p.U : Rational(8) * p.t * p.t / p.U;
    Rational lo = o.h_min.empty() ? -scale : rational_option("h-min", o.h_min);
    Rational hi = o.h_max.empty() ? scale : rational_option("h-max", o.h_max);
    PhaseDiagram d = ground_state_envelope(o.order, p, cells, lo, hi);

    bool ok = true;
    Json comparison;
    if (o.order == 2 || o.order == 4) {
        auto reference = reference_crossings(o.order, p.t, p.U);
        std::vector<Rational> inside;
        for (const auto& r : reference)
            if (lo < r && r < hi) inside.push_back(r);
        CrossingComparison c = compare_crossings(d, inside);
        ok = c.reference_realized();
        Json missing = Json::array(), extra = Json::array();
        for (const auto& m : c.missing) missing.push_back(exact(m));
        for (const auto& e : c.extra) extra.push_back(exact(e));
        comparison = Json{{"reference_in_window", inside.size()}, {"missing", missing}, {"extra", extra}, {"verdict", ok ? "realized" : "discrepancy"}};
    }

    Json crossings = Json::array();
    for (const auto& c : d.crossings) crossings.push_back(exact(c));
    Json intervals = Json::array();
    for (const auto& iv : d.intervals)
        intervals.push_back(Json{{"h_lo", iv.lo ? exact(*iv.lo) : Json(nullptr)},
                                 {"h_hi", iv.hi ? exact(*iv.hi) : Json(nullptr)},
                                 {"winner", iv.winner.label},
                                 {"cell", iv.winner.config.cell()},
                                 {"pattern", iv.winner.config.pattern()},
                                 {"magnetization", exact(iv.winner.magnetization)},
                                 {"energy_intercept", exact(iv.winner.intercept)},
                                 {"degenerate", iv.degenerate}});
    Json j{{"order", d.order},
           {"t", exact(p.t)},
           {"U", exact(p.U)},
           {"cells", o.cells + (o.rectangular ? " (rectangular)" : "")},
           {"window", {exact(lo), exact(hi)}},
           {"configurations", d.configurations},
           {"distinct_lines", d.lines.size()},
           {"crossings", crossings},
           {"intervals", intervals}};
    if (!comparison.is_null()) j["reference_comparison"] = comparison;

    if (!o.csv.empty()) {
        std::ostringstream csv;
        write_envelope_csv(csv, d);
        write_file(o.csv, csv.str());
    }
    if (!o.plot.empty()) {
        std::ostringstream plot;
        write_plot_data(plot, d, o.samples);
        write_file(o.plot, plot.str());
    }
    if (o.json == "-") {
        emit_json(j, o.json, out);
    } else {
        out << "order " << d.order << ", t = " << to_string(p.t) << ", U = " << to_string(p.U) << ", cells " << o.cells
            << (o.rectangular ? " (rectangular only)" : "") << ", h in [" << to_string(lo) << ", " << to_string(hi) << "]\n";
        out << d.configurations << " configurations, " << d.lines.size() << " distinct lines\n";
        Table table({"h_lo", "h_hi", "winner", "cell", "pattern", "m"});
        for (const auto& iv : d.intervals)
            table.add({iv.lo ? to_string(*iv.lo) : "-inf", iv.hi ? to_string(*iv.hi) : "+inf", iv.winner.label,
                       iv.winner.config.cell(), iv.winner.config.pattern(), to_string(iv.winner.magnetization)});
        table.print(out);
        out << "crossings:";
        for (const auto& c : d.crossings) out << ' ' << to_string(c);
        out << '\n';
        if (!comparison.is_null()) {
            out << "reference crossings: " << (ok ? "all realized" : "DISCREPANCY");
            for (const auto& m : comparison["missing"]) out << " missing " << m["exact"].get<std::string>();
            for (const auto& e : comparison["extra"]) out << " extra " << e["exact"].get<std::string>();
            out << '\n';
        }
        emit_json(j, o.json, out);
    }
    return {ok};
}

// ---- diagnostics ----------------------------------------------------------

struct DiagnosticsOptions {
    std::string t = "1/10", t_plus = "1/100", U = "7", h = "0", mu0 = "7/2", delta = "1/2", beta = "1000";
    int order = 1;
    std::string cells = "4x4";
    std::string json = "-";
};

Json finite(double v) { return std::isfinite(v) ? Json(v) : Json("inf"); }

Outcome run_diagnostics(const DiagnosticsOptions& o, std::ostream& out)
{
    StabilityInput in;
    in.t = rational_option("t", o.t);
    in.t_plus = rational_option("t-plus", o.t_plus);
    in.U = rational_option("U", o.U);
    in.h = rational_option("h", o.h);
    in.mu0 = rational_option("mu0", o.mu0);
    in.delta = rational_option("delta", o.delta);
    in.beta = rational_option("beta", o.beta);
    in.order = o.order;
    in.cells = parse_cell_bound(o.cells);
    StabilityDiagnostics r = stability_diagnostics(in);
    Json j{{"t", exact(in.t)},
           {"t_plus", exact(in.t_plus)},
           {"U", exact(in.U)},
           {"h", exact(in.h)},
           {"mu0", exact(in.mu0)},
           {"delta", exact(in.delta)},
           {"beta", exact(in.beta)},
           {"order", in.order},
           {"kappa", exact(r.kappa)},
           {"ground_states", r.ground_states},
           {"kappa_estimate", {{"plus", r.kappa_estimate_plus}, {"minus", r.kappa_estimate_minus}}},
           {"D", finite(r.D)},
           {"eps_ll", finite(r.eps_ll)},
           {"eps_hl", finite(r.eps_hl)},
           {"eps_lh", finite(r.eps_lh)},
           {"eps_hh", finite(r.eps_hh)},
           {"eta", finite(r.eta)},
           {"epsilon", finite(r.epsilon)},
           {"status", r.status}};
    if (o.json == "-") {
        emit_json(j, o.json, out);
    } else {
        out << "kappa " << to_string(r.kappa) << ", eta " << fixed(r.eta) << ", epsilon " << fixed(r.epsilon) << ", status "
            << r.status << "\n";
        emit_json(j, o.json, out);
    }
    return {r.status == "ok"};
}

// ---- identities -----------------------------------------------------------

struct IdentityOptions {
    std::vector<std::string> clusters{"bond", "chain3"};
    std::string json;
};

Outcome run_identities(const IdentityOptions& o, std::ostream& out)
{
    auto results = run_identity_suite(o.clusters);
    bool ok = true;
    Json arr = Json::array();
    Table table({"cluster", "identity", "cases", "result"});
    for (const auto& r : results) {
        ok = ok && r.holds;
        Json j{{"cluster", r.cluster}, {"identity", r.name}, {"statement", r.statement}, {"cases", r.instances}, {"holds", r.holds}};
        if (!r.holds) j["failure"] = r.failure;
        arr.push_back(j);
        table.add({r.cluster, r.name, std::to_string(r.instances), r.holds ? "pass" : "FAIL at " + r.failure});
    }
    Json j{{"identities", arr}, {"verdict", ok ? "pass" : "fail"}};
    if (o.json == "-") {
        emit_json(j, o.json, out);
    } else {
        table.print(out);
        out << "identities: " << (ok ? "all hold" : "FAILURES") << "\n";
        emit_json(j, o.json, out);
    }
    return {ok};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Strong-coupling effective Hamiltonians: derivation, validation and phase diagrams"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML configuration file; each subcommand reads its own [section]");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.set_help_all_flag("--help-all", "Help for all subcommands");

    DeriveOptions derive_opt;
    auto* derive_cmd = app.add_subcommand("derive", "Derive effective Hamiltonian coefficients and compare with the reference table");
    derive_cmd->add_option("--model", derive_opt.model, "one-band-symmetric | one-band-general | falicov-kimball | three-band")->capture_default_str();
    derive_cmd->add_option("--order", derive_opt.order, "Conjugation order (1 or 2)")->capture_default_str();
    derive_cmd->add_option("--set", derive_opt.set, "Bind a symbol to an exact value, e.g. t=1/10 (repeatable)");
    derive_cmd->add_option("--json", derive_opt.json, "Write the coefficient JSON to a file ('-' for stdout only)");

    ValidateOptions validate_opt;
    auto* validate_cmd = app.add_subcommand("validate-ed", "Compare effective and exact spectra numerically and fit scaling slopes");
    validate_cmd->add_option("--model", validate_opt.model, "Model name")->capture_default_str();
    validate_cmd->add_option("--cluster", validate_opt.cluster, "bond | chain3 | plaquette | cuo2_bond | ...")->capture_default_str();
    validate_cmd->add_option("--order", validate_opt.order, "Conjugation order (1 or 2)")->capture_default_str();
    validate_cmd->add_option("--t", validate_opt.t, "Hopping amplitudes (at least four, spanning a decade)")->delimiter(',')->capture_default_str();
    validate_cmd->add_option("--set", validate_opt.set, "Classical parameter value, e.g. U=8 (repeatable)");
    validate_cmd->add_option("--ratio", validate_opt.ratio, "Hopping symbol as a multiple of t, e.g. tp=1/2 (repeatable)");
    validate_cmd->add_option("--csv", validate_opt.csv, "Write the samples as CSV");
    validate_cmd->add_option("--json", validate_opt.json, "Write the JSON summary to a file ('-' for stdout only)");

    ScanOptions scan_opt;
    auto* scan_cmd = app.add_subcommand("scan-phase", "Exact zero-temperature phase diagram of the classical effective model");
    scan_cmd->add_option("--order", scan_opt.order, "Effective order in the hopping (0, 2 or 4)")->capture_default_str();
    scan_cmd->add_option("--t", scan_opt.t, "Hopping amplitude")->capture_default_str();
    scan_cmd->add_option("--U", scan_opt.U, "On-site interaction")->capture_default_str();
    scan_cmd->add_option("--k", scan_opt.k, "Chemical-potential shift (order 0)")->capture_default_str();
    scan_cmd->add_option("--cells", scan_opt.cells, "Period bound WxH: sheared cells of at most W*H sites")->capture_default_str();
    scan_cmd->add_flag("--rectangular-only", scan_opt.rectangular, "Only rectangular cells of width <= W and height <= H");
    scan_cmd->add_option("--h-min", scan_opt.h_min, "Lower end of the field window (default -8t^2/U, or -U at order 0)");
    scan_cmd->add_option("--h-max", scan_opt.h_max, "Upper end of the field window");
    scan_cmd->add_option("--samples", scan_opt.samples, "Grid points of the plot data")->capture_default_str();
    scan_cmd->add_option("--csv", scan_opt.csv, "Write the envelope intervals as CSV");
    scan_cmd->add_option("--plot", scan_opt.plot, "Write sampled energy lines for plotting");
    scan_cmd->add_option("--json", scan_opt.json, "Write the diagram JSON to a file ('-' for stdout only)");

    DiagnosticsOptions diag_opt;
    auto* diag_cmd = app.add_subcommand("diagnostics", "Stability diagnostics of the low-temperature expansion");
    diag_cmd->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
    diag_cmd->add_option("--t", diag_opt.t, "Hopping t")->capture_default_str();
    diag_cmd->add_option("--t-plus", diag_opt.t_plus, "Spin-up hopping")->capture_default_str();
    diag_cmd->add_option("--U", diag_opt.U, "On-site interaction")->capture_default_str();
    diag_cmd->add_option("--h", diag_opt.h, "Field")->capture_default_str();
    diag_cmd->add_option("--mu0", diag_opt.mu0, "Chemical potential")->capture_default_str();
    diag_cmd->add_option("--delta", diag_opt.delta, "Distance threshold")->capture_default_str();
    diag_cmd->add_option("--beta", diag_opt.beta, "Inverse temperature")->capture_default_str();
    diag_cmd->add_option("--order", diag_opt.order, "Conjugation order (1 or 2)")->capture_default_str();
    diag_cmd->add_option("--cells", diag_opt.cells, "Period bound for the ground-state search")->capture_default_str();
    diag_cmd->add_option("--json", diag_opt.json, "Write JSON to a file ('-' for stdout)")->capture_default_str();

    IdentityOptions id_opt;
    auto* id_cmd = app.add_subcommand("identities", "Check the projector and ladder-operator identities");
    id_cmd->add_option("--cluster", id_opt.clusters, "Clusters to check")->delimiter(',')->capture_default_str();
    id_cmd->add_option("--json", id_opt.json, "Write JSON to a file ('-' for stdout only)");

    for (auto* sub : app.get_subcommands({})) sub->allow_config_extras(CLI::config_extras_mode::error);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) reversed.pop_back();  // program name
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_parse_error;
    }

    try {
        Outcome outcome;
        if (derive_cmd->parsed())
            outcome = run_derive(derive_opt, out);
        else if (validate_cmd->parsed())
            outcome = run_validate(validate_opt, out);
        else if (scan_cmd->parsed())
            outcome = run_scan(scan_opt, out);
        else if (diag_cmd->parsed())
            outcome = run_diagnostics(diag_opt, out);
        else
            outcome = run_identities(id_opt, out);
        return outcome.passed ? exit_ok : exit_check_failed;
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << "\n";
        return exit_parse_error;
    } catch (const std::invalid_argument& e) {
        err << "precondition violated: " << e.what() << "\n";
        return exit_precondition;
    } catch (const std::out_of_range& e) {
        err << "precondition violated: " << e.what() << "\n";
        return exit_precondition;
    } catch (const ToleranceError& e) {
        err << "tolerance breached: " << e.what() << "\n";
        return exit_precondition;
    } catch (const ZeroDenominatorError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return exit_precondition;
    }
}

}  // namespace sc::cli
