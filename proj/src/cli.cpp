#include "qsl/cli.hpp"

#include "qsl/catalog.hpp"
#include "qsl/error.hpp"
#include "qsl/model_io.hpp"
#include "qsl/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qsl::cli {

namespace {

constexpr int kSchemaVersion = 1;

std::vector<double> parse_list(const std::string& text, const char* flag) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError(std::string(flag) + ": cannot parse '" + item + "' as a number");
        }
    }
    if (values.empty()) throw ConfigError(std::string(flag) + ": empty list");
    return values;
}

void validate_common(const RunConfig& c) {
    if (c.model.empty()) throw ConfigError("--model is required");
    if (!(c.gamma >= 0.0) || !std::isfinite(c.gamma)) throw ConfigError("--gamma must be a nonnegative number");
    if (!(c.omega >= 0.0) || !std::isfinite(c.omega)) throw ConfigError("--omega must be a nonnegative number");
    if (c.steps < kMinSteps) throw ConfigError("--steps must be >= 16");
    if (!(c.atol_attainable > 0.0)) throw ConfigError("--atol-attainable must be positive");
    if (c.taus.empty()) throw ConfigError("--tau or --tau-list is required");
    for (double t : c.taus)
        if (!(t > 0.0) || !std::isfinite(t)) throw ConfigError("horizons must be positive, got " + format_real(t));
}

bool looks_like_path(const std::string& s) {
    return s.find('/') != std::string::npos || s.ends_with(".json") || std::filesystem::exists(s);
}

std::string report_row(const RunConfig& c, const LindbladModel& model, const BoundReport& r) {
    auto opt = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string("nan"); };
    const std::vector<std::string> fields{
        csv_field(model.name()),
        format_real(c.gamma),
        format_real(c.omega),
        csv_field(c.init.empty() ? "default" : c.init),
        format_real(r.tau),
        std::to_string(r.steps),
        format_real(r.bures),
        format_real(r.length),
        format_real(r.ratio),
        format_real(r.tau_min.value),
        format_real(r.tau_min.error_bound),
        format_real(r.tau_av),
        opt(r.tau_op),
        opt(r.tau_hs),
        opt(r.tau_tr),
        std::string(to_string(r.verdict.kind)),
        format_real(r.verdict.gap),
        format_real(r.verdict.tolerance),
    };
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) line += ',';
        line += fields[i];
    }
    return line + "\r\n";
}

std::string join_header(const std::vector<std::string>& cols) {
    std::string line;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i > 0) line += ',';
        line += cols[i];
    }
    return line + "\r\n";
}

std::string report_csv(const RunConfig& c, const LindbladModel& model, const std::vector<BoundReport>& reports) {
    std::string csv = join_header(report_columns());
    for (const BoundReport& r : reports) csv += report_row(c, model, r);
    csv += "# schema_version=" + std::to_string(kSchemaVersion) + "\r\n";
    return csv;
}

// Stage names attached to numerical failures.
struct Stage {
    const char* name = "setup";
};

[[noreturn]] void rethrow_with_stage(const Stage& stage, const Error& e) {
    throw Error(std::string(stage.name) + ": " + e.what());
}

void write_output(const RunConfig& c, const std::string& text, std::ostream& out) {
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.out, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file '" + c.out + "'");
    file << text;
}

void add_shared_options(CLI::App& app, RunConfig& c, std::string& tau_list, std::optional<double>& tau,
                        std::string& eps_list, std::string& config_path) {
    app.add_option("--model", c.model, "catalog model name or path to a model JSON document");
    app.add_option("--gamma", c.gamma, "dissipation rate (inverse time)");
    app.add_option("--omega", c.omega, "precession frequency (angular)");
    app.add_option("--tau", tau, "horizon");
    app.add_option("--tau-list", tau_list, "comma-separated horizons, ascending");
    app.add_option("--steps", c.steps, "RK4 steps per trajectory");
    app.add_option("--init", c.init, "excited | ground | plus | mixed | x,y,z | path to a state JSON document");
    app.add_option("--eps-list", eps_list, "comma-separated trace-distance thresholds, descending");
    app.add_option("--atol-attainable", c.atol_attainable, "attainability tolerance in Bures radians");
    app.add_option("--out", c.out, "output CSV path (default: standard output)");
    app.add_option("--config", config_path, "JSON file carrying the same fields as the flags");
}

}  // namespace

const std::vector<std::string>& report_columns() {
    static const std::vector<std::string> cols{
        "model", "gamma", "omega", "init", "tau", "steps", "bures_angle", "path_length", "ratio",
        "tau_min", "tau_min_err", "tau_av", "tau_op", "tau_hs", "tau_tr", "verdict", "gap", "atol",
    };
    return cols;
}

const std::vector<std::string>& sweep_columns() {
    static const std::vector<std::string> cols{"epsilon", "T", "saturated"};
    return cols;
}

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char ch : text) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

LindbladModel resolve_model(const RunConfig& c) {
    if (is_catalog_name(c.model)) return make_catalog_model(c.model, c.gamma, c.omega);
    if (looks_like_path(c.model)) {
        try {
            return load_model_file(c.model);
        } catch (const Error& e) {
            throw ConfigError(e.what());
        }
    }
    throw ConfigError("unknown model '" + c.model + "' (see the 'models' command)");
}

DensityMatrix resolve_initial_state(const RunConfig& c, const LindbladModel& model) {
    const int dim = model.dim();
    if (c.init.empty()) {
        if (model.default_initial) return *model.default_initial;
        return DensityMatrix::pure(Eigen::VectorXcd::Ones(dim));
    }
    try {
        if (c.init == "excited") return DensityMatrix::basis_state(dim, dim - 1);
        if (c.init == "ground") return DensityMatrix::basis_state(dim, 0);
        if (c.init == "plus") return DensityMatrix::pure(Eigen::VectorXcd::Ones(dim));
        if (c.init == "mixed") return DensityMatrix::maximally_mixed(dim);
        if (c.init.find(',') != std::string::npos && !std::filesystem::exists(c.init)) {
            const std::vector<double> v = parse_list(c.init, "--init");
            if (v.size() != 3) throw ConfigError("--init: a Bloch vector needs three components");
            if (dim != 2) throw ConfigError("--init: Bloch vectors require a two-level model");
            return bloch_to_state({v[0], v[1], v[2]});
        }
        if (std::filesystem::exists(c.init)) {
            DensityMatrix rho = load_state_file(c.init);
            if (rho.dim() != dim) throw ConfigError("--init: state dimension does not match the model");
            return rho;
        }
    } catch (const Error& e) {
        throw ConfigError(std::string("--init: ") + e.what());
    }
    throw ConfigError("--init: unknown initial state '" + c.init + "'");
}

void apply_config_json(const std::string& text, RunConfig& c) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("--config: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("--config: expected a JSON object");
    auto list = [](const json& v, const char* key) {
        if (v.is_string()) return parse_list(v.get<std::string>(), key);
        if (v.is_array()) {
            std::vector<double> out;
            for (const json& x : v) {
                if (!x.is_number()) throw ConfigError(std::string("--config: ") + key + " must hold numbers");
                out.push_back(x.get<double>());
            }
            return out;
        }
        throw ConfigError(std::string("--config: ") + key + " must be a list");
    };
    try {
        for (const auto& [key, value] : doc.items()) {
            if (key == "model") c.model = value.get<std::string>();
            else if (key == "gamma") c.gamma = value.get<double>();
            else if (key == "omega") c.omega = value.get<double>();
            else if (key == "tau") c.taus = {value.get<double>()};
            else if (key == "tau_list") c.taus = list(value, "tau_list");
            else if (key == "steps") c.steps = value.get<std::size_t>();
            else if (key == "init") c.init = value.get<std::string>();
            else if (key == "eps_list") c.epsilons = list(value, "eps_list");
            else if (key == "atol_attainable") c.atol_attainable = value.get<double>();
            else if (key == "out") c.out = value.get<std::string>();
            else throw ConfigError("--config: unknown field '" + key + "'");
        }
    } catch (const json::type_error& e) {
        throw ConfigError(std::string("--config: ") + e.what());
    }
}

std::string run_csv(const RunConfig& c) {
    validate_common(c);
    const LindbladModel model = resolve_model(c);
    const DensityMatrix rho0 = resolve_initial_state(c, model);
    const ReportOptions opts{c.atol_attainable, kDefaultConsistencyTol};
    std::vector<BoundReport> reports;
    Stage stage;
    try {
        for (double tau : c.taus) {
            stage.name = "dynamics";
            const Trajectory traj = evolve(model, rho0, tau, c.steps);
            stage.name = "path-geometry";
            const PathLength pl = path_length(speed_profile(traj));
            stage.name = "qsl-bounds";
            reports.push_back(bound_report(traj, pl, opts));
        }
    } catch (const Error& e) {
        rethrow_with_stage(stage, e);
    }
    return report_csv(c, model, reports);
}

std::string epsilon_sweep_csv(const RunConfig& c) {
    validate_common(c);
    if (c.taus.size() != 1) throw ConfigError("epsilon-sweep takes a single --tau horizon");
    std::vector<double> eps = c.epsilons;
    if (eps.empty()) {
        for (int k = 1; k <= 12; ++k) eps.push_back(std::pow(10.0, -k));
    }
    for (std::size_t k = 0; k < eps.size(); ++k) {
        if (!(eps[k] > 0.0)) throw ConfigError("--eps-list values must be positive");
        if (k > 0 && !(eps[k] < eps[k - 1])) throw ConfigError("--eps-list must be strictly descending");
    }
    const LindbladModel model = resolve_model(c);
    const DensityMatrix rho0 = resolve_initial_state(c, model);

    Stage stage;
    StoppingTimeCurve curve;
    try {
        stage.name = "dynamics";
        const DensityMatrix rho_f = stationary_state(model).state;
        const Trajectory traj = evolve(model, rho0, c.taus.front(), c.steps);
        stage.name = "qsl-bounds";
        curve = stopping_time_curve(traj, rho_f, eps);
    } catch (const Error& e) {
        rethrow_with_stage(stage, e);
    }
    std::string csv = join_header(sweep_columns());
    for (const StoppingTimeEntry& e : curve.entries) {
        csv += format_real(e.epsilon) + "," + (e.time ? format_real(*e.time) : std::string("inf")) + "," +
               (e.saturated ? "true" : "false") + "\r\n";
    }
    csv += "# floor_epsilon=" + format_real(curve.floor_epsilon) + "\r\n";
    return csv;
}

std::string divergence_scan_csv(const RunConfig& c) {
    validate_common(c);
    for (std::size_t k = 1; k < c.taus.size(); ++k) {
        if (!(c.taus[k] > c.taus[k - 1])) throw ConfigError("--tau-list must be ascending");
    }
    const LindbladModel model = resolve_model(c);
    const DensityMatrix rho0 = resolve_initial_state(c, model);
    // The longest horizon gets exactly --steps; shorter ones keep the same step size.
    const double steps_per_unit = static_cast<double>(c.steps) / c.taus.back();
    std::vector<BoundReport> reports;
    try {
        reports = divergence_scan(model, rho0, c.taus, steps_per_unit, {c.atol_attainable, kDefaultConsistencyTol});
    } catch (const Error& e) {
        rethrow_with_stage(Stage{"divergence-scan"}, e);
    }
    return report_csv(c, model, reports);
}

std::string models_text() {
    std::ostringstream ss;
    for (const CatalogEntry& e : catalog_entries()) {
        ss << e.name << "  [" << e.parameters << "]\n    " << e.description << '\n';
    }
    ss << "custom  [--model path/to/model.json]\n"
          "    {\"dim\": n, \"hamiltonian\": M, \"jumps\": [{\"matrix\": M, \"rate\": g}]}, M = row-major [re, im] pairs.\n";
    return ss.str();
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum speed limit estimates along open-system trajectories"};
    app.require_subcommand(1);

    RunConfig config;
    std::string tau_list;
    std::optional<double> tau;
    std::string eps_list;
    std::string config_path;

    CLI::App* run = app.add_subcommand("run", "bound report per horizon");
    CLI::App* sweep = app.add_subcommand("epsilon-sweep", "trace-distance stopping times T(eps)");
    CLI::App* scan = app.add_subcommand("divergence-scan", "bound reports over growing horizons");
    CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
    CLI::App* models = app.add_subcommand("models", "list catalog models");
    for (CLI::App* sub : {run, sweep, scan}) add_shared_options(*sub, config, tau_list, tau, eps_list, config_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitConfig;
    }

    if (models->parsed()) {
        out << models_text();
        return kExitOk;
    }
    if (verify->parsed()) {
        const bool ok = print_invariant_suite(run_invariant_suite(), out);
        return ok ? kExitOk : kExitVerifyFailed;
    }

    try {
        if (!config_path.empty()) {
            // Flags given explicitly win over the file, so parse the file into a
            // fresh config and copy only the fields left at their defaults.
            std::ifstream in(config_path);
            if (!in) throw ConfigError("--config: cannot open '" + config_path + "'");
            std::stringstream ss;
            ss << in.rdbuf();
            RunConfig from_file;
            apply_config_json(ss.str(), from_file);
            CLI::App* sub = run->parsed() ? run : (sweep->parsed() ? sweep : scan);
            auto given = [&](const char* flag) { return sub->get_option(flag)->count() > 0; };
            if (!given("--model")) config.model = from_file.model;
            if (!given("--gamma")) config.gamma = from_file.gamma;
            if (!given("--omega")) config.omega = from_file.omega;
            if (!given("--steps")) config.steps = from_file.steps;
            if (!given("--init")) config.init = from_file.init;
            if (!given("--atol-attainable")) config.atol_attainable = from_file.atol_attainable;
            if (!given("--out")) config.out = from_file.out;
            if (!given("--tau") && !given("--tau-list")) config.taus = from_file.taus;
            if (!given("--eps-list")) config.epsilons = from_file.epsilons;
        }
        if (tau && !tau_list.empty()) throw ConfigError("give either --tau or --tau-list, not both");
        if (tau) config.taus = {*tau};
        if (!tau_list.empty()) config.taus = parse_list(tau_list, "--tau-list");
        if (!eps_list.empty()) config.epsilons = parse_list(eps_list, "--eps-list");

        std::string csv;
        if (run->parsed()) csv = run_csv(config);
        else if (sweep->parsed()) csv = epsilon_sweep_csv(config);
        else csv = divergence_scan_csv(config);
        write_output(config, csv, out);
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error& e) {
        err << "numerical failure in " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace qsl::cli
