// namrqed command-line tool: spectrum runs and analytic/numeric comparison.
//
//   namrqed run --figure 2 --out-dir out
//   namrqed run --config myrun.json --method ft
//   namrqed compare --figure 2 --nmax 1 --tolerance 0.05

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "namrqed/namrqed.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    int figure = 0;
    std::string method;
    std::optional<int> nmax;
    std::string truncation;
    std::optional<double> omega_min, omega_max;
    std::optional<std::size_t> omega_points;
    std::string out_dir;
    bool emit_plot_script = false;
    std::optional<double> tolerance;
};

void add_common_flags(CLI::App& cmd, CommonFlags& flags) {
    cmd.add_option("--config", flags.config_path, "JSON configuration file");
    cmd.add_option("--figure", flags.figure, "figure preset (2, 3 or 4)")
        ->check(CLI::IsMember({2, 3, 4}));
    cmd.add_option("--method", flags.method, "analytic | ft | resolvent")
        ->check(CLI::IsMember({"analytic", "ft", "resolvent"}));
    cmd.add_option("--nmax", flags.nmax, "basis cutoff");
    cmd.add_option("--truncation", flags.truncation, "total | fock")
        ->check(CLI::IsMember({"total", "fock"}));
    cmd.add_option("--omega-min", flags.omega_min, "spectrum window lower edge, GHz");
    cmd.add_option("--omega-max", flags.omega_max, "spectrum window upper edge, GHz");
    cmd.add_option("--omega-points", flags.omega_points, "spectrum grid size");
    cmd.add_option("--out-dir", flags.out_dir, "output directory");
    cmd.add_flag("--emit-plot-script", flags.emit_plot_script,
                 "write a gnuplot script referencing the CSVs");
    cmd.add_option("--tolerance", flags.tolerance, "pass/fail tolerance for compare");
}

namrqed::run::RunConfig build_config(const CommonFlags& flags) {
    using namrqed::run::RunConfig;
    if (flags.config_path.empty() && flags.figure == 0)
        throw namrqed::InvalidConfig("either --config or --figure is required");
    if (!flags.config_path.empty() && flags.figure != 0)
        throw namrqed::InvalidConfig("--config and --figure are mutually exclusive");

    RunConfig config = flags.figure ? namrqed::run::figure_preset(flags.figure)
                                    : namrqed::run::load_config(flags.config_path);
    if (!flags.method.empty()) {
        if (flags.method == "analytic")
            config.method = namrqed::spectrum::SpectrumMethod::AnalyticClosedForm;
        else if (flags.method == "ft")
            config.method = namrqed::spectrum::SpectrumMethod::TauGridFT;
        else
            config.method = namrqed::spectrum::SpectrumMethod::Resolvent;
    }
    if (flags.nmax) config.basis.cutoff = *flags.nmax;
    if (!flags.truncation.empty())
        config.basis.scheme = flags.truncation == "total"
                                  ? namrqed::hilbert::TruncationScheme::TotalExcitation
                                  : namrqed::hilbert::TruncationScheme::FockCutoff;
    if (flags.omega_min) config.omega_min = flags.omega_min;
    if (flags.omega_max) config.omega_max = flags.omega_max;
    if (flags.omega_points) config.omega_points = *flags.omega_points;
    if (!flags.out_dir.empty()) config.out_dir = flags.out_dir;
    if (flags.emit_plot_script) config.emit_plot_script = true;
    if (flags.tolerance) config.tolerance = *flags.tolerance;
    config.validate();
    return config;
}

template <typename Fn>
int guarded(Fn&& fn) {
    using namespace namrqed;
    try {
        return fn();
    } catch (const SingularMatrix& e) {
        std::cerr << "error: SingularMatrix: " << e.what() << '\n';
    } catch (const DefectiveMatrix& e) {
        std::cerr << "error: DefectiveMatrix: " << e.what() << '\n';
    } catch (const AmbiguousKernel& e) {
        std::cerr << "error: AmbiguousKernel: " << e.what() << '\n';
    } catch (const InvalidDevice& e) {
        std::cerr << "error: InvalidDevice: " << e.what() << '\n';
    } catch (const BasisMismatch& e) {
        std::cerr << "error: BasisMismatch: " << e.what() << '\n';
    } catch (const ExceptionalPoint& e) {
        std::cerr << "error: ExceptionalPoint: " << e.what() << '\n';
    } catch (const TailTooFat& e) {
        std::cerr << "error: TailTooFat: " << e.what() << '\n';
    } catch (const SingularResolvent& e) {
        std::cerr << "error: SingularResolvent: " << e.what() << '\n';
    } catch (const NoPeaks& e) {
        std::cerr << "error: NoPeaks: " << e.what() << '\n';
    } catch (const InvalidConfig& e) {
        std::cerr << "error: InvalidConfig: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Correlation spectra of a driven nanomechanical resonator coupled to a charge qubit"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    CLI::App* run_cmd = app.add_subcommand("run", "compute spectra and write CSV/JSON artifacts");
    add_common_flags(*run_cmd, run_flags);

    CommonFlags cmp_flags;
    CLI::App* cmp_cmd = app.add_subcommand("compare", "analytic closed form vs resolvent");
    add_common_flags(*cmp_cmd, cmp_flags);

    CLI11_PARSE(app, argc, argv);

    if (run_cmd->parsed()) {
        return guarded([&] {
            const auto config = build_config(run_flags);
            const auto artifacts = namrqed::run::run(config);
            for (const auto& path : artifacts.csv_paths) std::cout << "wrote " << path << '\n';
            std::cout << "wrote " << artifacts.summary_path << '\n';
            if (artifacts.plot_path) std::cout << "wrote " << *artifacts.plot_path << '\n';
            return 0;
        });
    }
    return guarded([&] {
        const auto config = build_config(cmp_flags);
        const auto report = namrqed::run::compare(config);
        std::cout << report.json;
        std::cout << (report.pass ? "PASS" : "FAIL") << " (max pointwise rel diff "
                  << report.max_pointwise_rel_diff << ", splitting rel diff "
                  << report.splitting_rel_diff << ", tolerance " << report.tolerance << ")\n";
        return report.pass ? 0 : 2;
    });
}
