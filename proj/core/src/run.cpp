#include "namrqed/run.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace namrqed::run {

namespace {

using nlohmann::ordered_json;

std::string fmt15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

double require_number(const ordered_json& j, const std::string& section, const std::string& key) {
    if (!j.contains(key))
        throw InvalidConfig("config: missing key '" + key + "' in " + section);
    if (!j.at(key).is_number())
        throw InvalidConfig("config: key '" + key + "' in " + section + " must be a number");
    return j.at(key).get<double>();
}

void reject_unknown(const ordered_json& j, const std::string& section,
                    std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (item.key() == k) known = true;
        if (!known)
            throw InvalidConfig("config: unknown key '" + item.key() + "' in " + section);
    }
}

model::EffectiveParams parse_effective(const ordered_json& j) {
    reject_unknown(j, "effective",
                   {"delta", "delta_a", "delta_r", "g", "xi", "kappa", "gamma", "emf_prefactor"});
    model::EffectiveParams p;
    p.delta_r = j.contains("delta_r") ? require_number(j, "effective", "delta_r") : 0.0;
    const bool has_delta = j.contains("delta");
    const bool has_delta_a = j.contains("delta_a");
    if (has_delta == has_delta_a)
        throw InvalidConfig("config: effective block needs exactly one of 'delta' or 'delta_a'");
    p.delta_a = has_delta_a ? require_number(j, "effective", "delta_a")
                            : require_number(j, "effective", "delta") + p.delta_r;
    p.g = require_number(j, "effective", "g");
    p.xi = require_number(j, "effective", "xi");
    p.kappa = require_number(j, "effective", "kappa");
    p.gamma = require_number(j, "effective", "gamma");
    if (j.contains("emf_prefactor")) p.emf_prefactor = require_number(j, "effective", "emf_prefactor");
    if (p.kappa < 0.0 || p.gamma < 0.0)
        throw InvalidConfig("config: decay rates must be nonnegative");
    return p;
}

model::DeviceParams parse_device(const ordered_json& j) {
    reject_unknown(j, "device",
                   {"E_C", "E_J0", "flux_ratio", "n_g", "C_J", "C_g", "C_n", "d", "B", "l", "M",
                    "Omega", "I0", "omega_p", "kappa", "gamma"});
    model::DeviceParams dev;
    dev.E_C = require_number(j, "device", "E_C");
    dev.E_J0 = require_number(j, "device", "E_J0");
    dev.flux_ratio = require_number(j, "device", "flux_ratio");
    dev.n_g = require_number(j, "device", "n_g");
    dev.C_J = require_number(j, "device", "C_J");
    dev.C_g = require_number(j, "device", "C_g");
    dev.C_n = require_number(j, "device", "C_n");
    dev.d = require_number(j, "device", "d");
    dev.B = require_number(j, "device", "B");
    dev.l = require_number(j, "device", "l");
    dev.M = require_number(j, "device", "M");
    dev.Omega = require_number(j, "device", "Omega");
    dev.I0 = require_number(j, "device", "I0");
    dev.omega_p = require_number(j, "device", "omega_p");
    dev.kappa = require_number(j, "device", "kappa");
    dev.gamma = require_number(j, "device", "gamma");
    return dev;
}

SpectrumMethod parse_method(const std::string& name) {
    if (name == "analytic") return SpectrumMethod::AnalyticClosedForm;
    if (name == "ft") return SpectrumMethod::TauGridFT;
    if (name == "resolvent") return SpectrumMethod::Resolvent;
    throw InvalidConfig("config: unknown method '" + name + "'");
}

const char* method_name(SpectrumMethod m) {
    switch (m) {
        case SpectrumMethod::AnalyticClosedForm: return "analytic";
        case SpectrumMethod::TauGridFT: return "ft";
        case SpectrumMethod::Resolvent: return "resolvent";
    }
    return "?";
}

// One sweep entry resolved to concrete parameters.
struct ResolvedRun {
    model::EffectiveParams params;
    hilbert::BasisSpec basis;
    std::string suffix;  // file-name suffix, e.g. "_N2"
};

std::vector<ResolvedRun> resolve_runs(const RunConfig& config) {
    std::vector<ResolvedRun> runs;
    if (!config.sweep) {
        runs.push_back({config.params, config.basis, ""});
        return runs;
    }
    for (double v : config.sweep->values) {
        ResolvedRun r{config.params, config.basis, ""};
        if (config.sweep->name == "N") {
            r.basis.cutoff = static_cast<int>(v);
            r.suffix = "_N" + std::to_string(r.basis.cutoff);
        } else if (config.sweep->name == "delta") {
            r.params.delta_a = v + r.params.delta_r;
            r.suffix = "_delta";
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%g", v);
            r.suffix += buf;
        } else if (config.sweep->name == "xi") {
            r.params.xi = v;
            r.suffix = "_xi";
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%g", v);
            r.suffix += buf;
        } else {
            throw InvalidConfig("config: unknown sweep name '" + config.sweep->name + "'");
        }
        runs.push_back(std::move(r));
    }
    return runs;
}

std::vector<double> omega_grid_for(const RunConfig& config,
                                   const analytic::PerturbativeCoefficients& coeffs) {
    if (config.omega_min && config.omega_max) {
        std::vector<double> omegas(config.omega_points);
        const double lo = *config.omega_min, hi = *config.omega_max;
        for (std::size_t i = 0; i < omegas.size(); ++i)
            omegas[i] = lo + (hi - lo) * static_cast<double>(i) /
                                 static_cast<double>(omegas.size() - 1);
        return omegas;
    }
    return spectrum::default_omega_grid(coeffs, config.omega_points);
}

std::vector<double> tau_grid_for(const RunConfig& config,
                                 const analytic::PerturbativeCoefficients& coeffs) {
    if (config.tau_span) {
        std::vector<double> taus(config.tau_points);
        for (std::size_t i = 0; i < taus.size(); ++i)
            taus[i] = *config.tau_span * static_cast<double>(i) /
                      static_cast<double>(taus.size() - 1);
        return taus;
    }
    return correlations::default_tau_grid(coeffs, config.tau_points);
}

struct SpectrumBundle {
    spectrum::Spectrum spec;
    double elastic_weight = 0.0;
    bool perturbative_warning = false;
    bool numeric = false;
};

SpectrumBundle compute_bundle(const model::EffectiveParams& params,
                              const hilbert::BasisSpec& basis, SpectrumMethod method,
                              const RunConfig& config,
                              const analytic::PerturbativeCoefficients& coeffs) {
    SpectrumBundle bundle;
    const std::vector<double> omegas = omega_grid_for(config, coeffs);

    if (method == SpectrumMethod::AnalyticClosedForm) {
        bundle.spec.omegas = omegas;
        bundle.spec.values = analytic::analytic_spectrum(coeffs, params.emf_prefactor, omegas);
        bundle.spec.method = method;
        bundle.spec.params_echo = params;
        return bundle;
    }

    const auto h = model::build_hamiltonian(params, basis);
    const auto liouville = dynamics::build_liouvillian(h, params);
    dynamics::SteadyStateInfo info;
    const auto rho_ss = dynamics::steady_state(liouville, &info);
    bundle.numeric = true;
    bundle.perturbative_warning = info.perturbative_warning;
    bundle.elastic_weight = correlations::emf_elastic_offset(rho_ss, params, basis);

    if (method == SpectrumMethod::Resolvent) {
        bundle.spec = spectrum::spectrum_resolvent(liouville, rho_ss, params, basis, omegas);
        return bundle;
    }
    auto trace = correlations::emf_correlation(liouville, rho_ss, params, basis,
                                               tau_grid_for(config, coeffs));
    correlations::subtract_offset(trace, bundle.elastic_weight);
    bundle.spec = spectrum::spectrum_from_trace(trace, omegas, params);
    return bundle;
}

void write_csv(const std::string& path, const spectrum::Spectrum& s) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidConfig("run: cannot write " + path);
    out << "omega,s_v\n";
    for (std::size_t i = 0; i < s.omegas.size(); ++i)
        out << fmt15(s.omegas[i]) << ',' << fmt15(s.values[i]) << '\n';
}

ordered_json params_echo_json(const model::EffectiveParams& p, const hilbert::BasisSpec& basis) {
    ordered_json j;
    j["delta_a"] = p.delta_a;
    j["delta_r"] = p.delta_r;
    j["delta"] = p.delta();
    j["g"] = p.g;
    j["xi"] = p.xi;
    j["kappa"] = p.kappa;
    j["gamma"] = p.gamma;
    j["emf_prefactor"] = p.emf_prefactor;
    j["truncation"] =
        basis.scheme == hilbert::TruncationScheme::TotalExcitation ? "total" : "fock";
    j["nmax"] = basis.cutoff;
    return j;
}

} // namespace

void RunConfig::validate() const {
    if (basis.cutoff < 0) throw InvalidConfig("config: nmax must be nonnegative");
    if (sweep && sweep->values.empty())
        throw InvalidConfig("config: sweep values must be nonempty");
    if (omega_min.has_value() != omega_max.has_value())
        throw InvalidConfig("config: omega_min and omega_max must be given together");
    if (omega_min && !(*omega_min < *omega_max))
        throw InvalidConfig("config: omega_min must be below omega_max");
    if (omega_points < 3) throw InvalidConfig("config: omega_points must be at least 3");
    if (tau_points < 2) throw InvalidConfig("config: tau_points must be at least 2");
    if (tolerance <= 0.0) throw InvalidConfig("config: tolerance must be positive");
}

RunConfig parse_config(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidConfig(std::string("config: JSON parse error: ") + e.what());
    }
    reject_unknown(doc, "document", {"effective", "device", "run"});

    RunConfig config;
    const bool has_effective = doc.contains("effective");
    const bool has_device = doc.contains("device");
    if (has_effective == has_device)
        throw InvalidConfig("config: exactly one of 'effective' or 'device' must be present");
    if (has_effective) {
        config.params = parse_effective(doc.at("effective"));
    } else {
        const model::DeviceParams dev = parse_device(doc.at("device"));
        config.params = model::derive_effective(dev).params;
        config.device = dev;
    }

    if (doc.contains("run")) {
        const ordered_json& r = doc.at("run");
        reject_unknown(r, "run",
                       {"truncation", "nmax", "method", "omega_min", "omega_max", "omega_points",
                        "tau_span", "tau_points", "sweep", "out_dir", "label", "emit_plot_script",
                        "tolerance"});
        if (r.contains("truncation")) {
            const std::string t = r.at("truncation").get<std::string>();
            if (t == "total")
                config.basis.scheme = hilbert::TruncationScheme::TotalExcitation;
            else if (t == "fock")
                config.basis.scheme = hilbert::TruncationScheme::FockCutoff;
            else
                throw InvalidConfig("config: unknown truncation '" + t + "'");
        }
        if (r.contains("nmax")) config.basis.cutoff = r.at("nmax").get<int>();
        if (r.contains("method")) config.method = parse_method(r.at("method").get<std::string>());
        if (r.contains("omega_min")) config.omega_min = require_number(r, "run", "omega_min");
        if (r.contains("omega_max")) config.omega_max = require_number(r, "run", "omega_max");
        if (r.contains("omega_points")) config.omega_points = r.at("omega_points").get<std::size_t>();
        if (r.contains("tau_span")) config.tau_span = require_number(r, "run", "tau_span");
        if (r.contains("tau_points")) config.tau_points = r.at("tau_points").get<std::size_t>();
        if (r.contains("out_dir")) config.out_dir = r.at("out_dir").get<std::string>();
        if (r.contains("label")) config.label = r.at("label").get<std::string>();
        if (r.contains("emit_plot_script")) config.emit_plot_script = r.at("emit_plot_script").get<bool>();
        if (r.contains("tolerance")) config.tolerance = require_number(r, "run", "tolerance");
        if (r.contains("sweep")) {
            const ordered_json& s = r.at("sweep");
            reject_unknown(s, "sweep", {"name", "values"});
            Sweep sweep;
            sweep.name = s.at("name").get<std::string>();
            for (const auto& v : s.at("values")) sweep.values.push_back(v.get<double>());
            config.sweep = sweep;
        }
    }
    config.validate();
    return config;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidConfig("config: cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

RunConfig figure_preset(int figure) {
    RunConfig config;
    config.params.delta_a = 0.2;
    config.params.delta_r = 0.0;
    config.params.g = 0.2;
    config.params.xi = 0.02;
    config.params.kappa = 0.004;
    config.params.gamma = 0.004;
    config.basis = {hilbert::TruncationScheme::TotalExcitation, 1};
    config.method = SpectrumMethod::Resolvent;
    switch (figure) {
        case 2:
            config.label = "fig2";
            config.sweep = Sweep{"N", {1.0, 2.0, 3.0}};
            break;
        case 3:
            config.label = "fig3";
            config.sweep = Sweep{"delta", {0.0, 0.4, 0.8}};
            break;
        case 4:
            config.label = "fig4";
            config.sweep = Sweep{"xi", {0.02, 0.03, 0.04}};
            break;
        default:
            throw InvalidConfig("figure_preset: only figures 2, 3 and 4 exist");
    }
    return config;
}

spectrum::Spectrum compute_spectrum(const RunConfig& config, SpectrumMethod method) {
    const auto coeffs = analytic::coefficients(config.params);
    return compute_bundle(config.params, config.basis, method, config, coeffs).spec;
}

RunArtifacts run(const RunConfig& config) {
    config.validate();
    std::filesystem::create_directories(config.out_dir);

    RunArtifacts artifacts;
    ordered_json summary;
    summary["schema_version"] = 1;
    summary["label"] = config.label;
    summary["method"] = method_name(config.method);
    if (config.sweep) {
        summary["sweep"] = {{"name", config.sweep->name}, {"values", config.sweep->values}};
    } else {
        summary["sweep"] = nullptr;
    }
    summary["runs"] = ordered_json::array();

    std::vector<std::string> csv_names;
    for (const ResolvedRun& r : resolve_runs(config)) {
        const auto coeffs = analytic::coefficients(r.params);
        const SpectrumBundle bundle = compute_bundle(r.params, r.basis, config.method, config, coeffs);

        const std::string csv_name = config.label + r.suffix + ".csv";
        const std::string csv_path = (std::filesystem::path(config.out_dir) / csv_name).string();
        write_csv(csv_path, bundle.spec);
        artifacts.csv_paths.push_back(csv_path);
        csv_names.push_back(csv_name);

        const auto report = spectrum::find_peaks(bundle.spec);
        ordered_json entry;
        entry["params"] = params_echo_json(r.params, r.basis);
        entry["csv"] = csv_name;
        entry["peaks"] = ordered_json::array();
        for (const auto& peak : report.peaks) {
            ordered_json pj;
            pj["position"] = peak.position;
            pj["height"] = peak.height;
            pj["fwhm"] = peak.fwhm;
            entry["peaks"].push_back(pj);
        }
        if (report.splitting)
            entry["splitting"] = *report.splitting;
        else
            entry["splitting"] = nullptr;
        entry["dominance_ratio"] = report.dominance_ratio;
        entry["analytic_splitting"] = analytic::analytic_splitting(coeffs);
        if (bundle.numeric) {
            entry["elastic_weight"] = bundle.elastic_weight;
            entry["perturbative_warning"] = bundle.perturbative_warning;
        } else {
            entry["elastic_weight"] = nullptr;
            entry["perturbative_warning"] = nullptr;
        }
        entry["negative_dip"] = spectrum::has_negative_dip(bundle.spec);
        if (config.device) {
            // lab-frame positions omega_p + phi for spectra derived from a device
            ordered_json lab = ordered_json::array();
            for (const auto& peak : report.peaks) lab.push_back(config.device->omega_p + peak.position);
            entry["lab_frame_peak_positions"] = lab;
        }
        summary["runs"].push_back(entry);
    }

    if (config.emit_plot_script) {
        const std::string plot_name = config.label + "_plot.gp";
        const std::string plot_path = (std::filesystem::path(config.out_dir) / plot_name).string();
        std::ofstream out(plot_path, std::ios::binary);
        out << "# gnuplot script generated by namrqed\n";
        out << "set datafile separator ','\n";
        out << "set xlabel 'omega (GHz)'\n";
        out << "set ylabel 'S_V(omega)'\n";
        out << "set key top left\n";
        out << "plot ";
        for (std::size_t i = 0; i < csv_names.size(); ++i) {
            if (i) out << ", \\\n     ";
            out << "'" << csv_names[i] << "' using 1:2 with lines title '" << csv_names[i] << "'";
        }
        out << '\n';
        artifacts.plot_path = plot_path;
    }

    artifacts.summary_json = summary.dump(2) + "\n";
    artifacts.summary_path =
        (std::filesystem::path(config.out_dir) / (config.label + "_summary.json")).string();
    std::ofstream out(artifacts.summary_path, std::ios::binary);
    out << artifacts.summary_json;
    return artifacts;
}

CompareReport compare(const RunConfig& config) {
    config.validate();
    std::filesystem::create_directories(config.out_dir);

    const auto coeffs = analytic::coefficients(config.params);
    const std::vector<double> omegas = omega_grid_for(config, coeffs);

    spectrum::Spectrum analytic_spec;
    analytic_spec.omegas = omegas;
    analytic_spec.values =
        analytic::analytic_spectrum(coeffs, config.params.emf_prefactor, omegas);
    analytic_spec.method = SpectrumMethod::AnalyticClosedForm;
    analytic_spec.params_echo = config.params;

    const auto h = model::build_hamiltonian(config.params, config.basis);
    const auto liouville = dynamics::build_liouvillian(h, config.params);
    const auto rho_ss = dynamics::steady_state(liouville);
    const auto resolvent_spec =
        spectrum::spectrum_resolvent(liouville, rho_ss, config.params, config.basis, omegas);

    const double peak_height =
        *std::max_element(analytic_spec.values.begin(), analytic_spec.values.end());
    double max_diff = 0.0;
    for (std::size_t i = 0; i < omegas.size(); ++i)
        max_diff = std::max(max_diff,
                            std::abs(analytic_spec.values[i] - resolvent_spec.values[i]));

    const auto peaks_a = spectrum::find_peaks(analytic_spec);
    const auto peaks_r = spectrum::find_peaks(resolvent_spec);

    CompareReport report;
    report.max_pointwise_rel_diff = max_diff / peak_height;
    report.analytic_splitting = analytic::analytic_splitting(coeffs);
    if (peaks_a.splitting && peaks_r.splitting)
        report.splitting_rel_diff =
            std::abs(*peaks_r.splitting - *peaks_a.splitting) / *peaks_a.splitting;
    report.tolerance = config.tolerance;
    report.pass = report.max_pointwise_rel_diff <= config.tolerance &&
                  report.splitting_rel_diff <= config.tolerance;

    ordered_json j;
    j["schema_version"] = 1;
    j["label"] = config.label;
    j["params"] = params_echo_json(config.params, config.basis);
    j["max_pointwise_rel_diff"] = report.max_pointwise_rel_diff;
    j["splitting_rel_diff"] = report.splitting_rel_diff;
    j["analytic_splitting"] = report.analytic_splitting;
    j["analytic_peaks"] = peaks_a.splitting ? ordered_json(*peaks_a.splitting) : ordered_json(nullptr);
    j["resolvent_peaks"] = peaks_r.splitting ? ordered_json(*peaks_r.splitting) : ordered_json(nullptr);
    j["tolerance"] = report.tolerance;
    j["pass"] = report.pass;
    report.json = j.dump(2) + "\n";
    report.json_path =
        (std::filesystem::path(config.out_dir) / (config.label + "_compare.json")).string();
    std::ofstream out(report.json_path, std::ios::binary);
    out << report.json;
    return report;
}

} // namespace namrqed::run
