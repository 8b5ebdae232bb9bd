// run.hpp — Experiment runner: resolves a configuration into spectra on
// disk (CSV per sweep value + JSON summary + optional plot script) and
// cross-validates the analytic and numeric methods.
//
// Configuration files are JSON with exactly one parameter source block and
// an optional run block:
//
//   {
//     "effective": { "delta": 0.2,      // qubit-resonator detuning, or "delta_a"
//                    "delta_r": 0.0,    // resonator-drive detuning (default 0)
//                    "g": 0.2, "xi": 0.02, "kappa": 0.004, "gamma": 0.004,
//                    "emf_prefactor": 1.0 },
//     "device":    { "E_C": ..., "E_J0": ..., "flux_ratio": ..., "n_g": ...,
//                    "C_J": ..., "C_g": ..., "C_n": ..., "d": ..., "B": ...,
//                    "l": ..., "M": ..., "Omega": ..., "I0": ..., "omega_p": ...,
//                    "kappa": ..., "gamma": ... },
//     "run":       { "truncation": "total" | "fock", "nmax": 1,
//                    "method": "analytic" | "ft" | "resolvent",
//                    "omega_min": ..., "omega_max": ..., "omega_points": 2001,
//                    "tau_span": ..., "tau_points": 4096,
//                    "sweep": { "name": "N" | "delta" | "xi", "values": [...] },
//                    "out_dir": ".", "label": "run",
//                    "emit_plot_script": false, "tolerance": 0.05 }
//   }

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "namrqed/spectrum.hpp"

namespace namrqed::run {

using spectrum::SpectrumMethod;

struct Sweep {
    std::string name;  // "N", "delta" or "xi"
    std::vector<double> values;
};

struct RunConfig {
    model::EffectiveParams params;
    std::optional<model::DeviceParams> device;  // set when derived from a device block
    hilbert::BasisSpec basis{hilbert::TruncationScheme::TotalExcitation, 1};
    SpectrumMethod method = SpectrumMethod::Resolvent;

    std::optional<double> omega_min, omega_max;
    std::size_t omega_points = 2001;
    std::optional<double> tau_span;
    std::size_t tau_points = 4096;

    std::optional<Sweep> sweep;
    std::string out_dir = ".";
    std::string label = "run";
    bool emit_plot_script = false;
    double tolerance = 0.05;

    void validate() const;  // throws InvalidConfig
};

// Parse a configuration document; throws InvalidConfig on malformed or
// unknown keys, or when not exactly one of effective/device is present.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

// Hard-coded sweeps at the published parameter set (delta = 0.2, g = 0.2,
// xi = 0.02, kappa = gamma = 0.004 GHz, drive on resonator resonance):
//   2 -> N in {1, 2, 3};  3 -> delta in {0, 0.4, 0.8};  4 -> xi in {0.02, 0.03, 0.04}
RunConfig figure_preset(int figure);

struct RunArtifacts {
    std::vector<std::string> csv_paths;
    std::string summary_path;
    std::optional<std::string> plot_path;
    std::string summary_json;  // the summary document, as written
};

// Execute the configured sweep; writes one CSV per value plus the schema-
// versioned JSON summary. Outputs are byte-identical for identical configs.
RunArtifacts run(const RunConfig& config);

struct CompareReport {
    double max_pointwise_rel_diff = 0.0;  // normalized by the analytic peak height
    double splitting_rel_diff = 0.0;
    double analytic_splitting = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string json;
    std::string json_path;
};

// Analytic closed form vs resolvent on an identical grid.
CompareReport compare(const RunConfig& config);

// Single spectrum for the resolved (non-sweep) configuration; shared by
// run/compare and handy for direct library use.
spectrum::Spectrum compute_spectrum(const RunConfig& config, SpectrumMethod method);

} // namespace namrqed::run
