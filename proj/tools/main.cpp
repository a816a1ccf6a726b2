// Command-line front end: effective-potential sampling, delay sweeps,
// model-vs-data comparison and unit conversions. Emits CSV/JSON on stdout
// for external plotting; diagnostics go to stderr only.
//
// Exit codes: 0 success, 2 usage, 3 model-domain error (BSI, saturation),
// 4 I/O or parse error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "attoclock/data.hpp"
#include "attoclock/errors.hpp"
#include "attoclock/format.hpp"
#include "attoclock/units.hpp"

namespace {

using namespace attoclock;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AtomPreset {
    const char* name;
    double ip;
    double z_eff;
};

// He with the Clementi charge, the sqrt(2 Ip) alternative, and hydrogen.
constexpr AtomPreset kPresets[] = {
    {"He", 0.90357, 1.6875},
    {"He-alt", 0.90357, 1.344},
    {"H", 0.5, 1.0},
};

constexpr double kDefaultOmega0 = 0.062;

struct CommonFlags {
    std::string atom_name;
    std::optional<double> ip;
    std::optional<double> z_eff;
    std::optional<double> omega0;
    double ellipticity = 0.87;
};

void add_atom_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--atom", flags.atom_name, "atom preset: He, He-alt or H");
    cmd->add_option("--ip", flags.ip, "ionization potential override, au");
    cmd->add_option("--zeff", flags.z_eff, "effective nuclear charge override");
    cmd->add_option("--ellipticity", flags.ellipticity, "pulse ellipticity (metadata)");
}

AtomSpec resolve_atom(const CommonFlags& flags) {
    AtomSpec atom{0.0, 0.0, ""};
    if (!flags.atom_name.empty()) {
        bool found = false;
        for (const AtomPreset& preset : kPresets) {
            if (flags.atom_name == preset.name) {
                atom = AtomSpec{preset.ip, preset.z_eff, preset.name};
                found = true;
                break;
            }
        }
        if (!found) {
            throw UsageError("unknown atom preset '" + flags.atom_name +
                             "' (expected He, He-alt or H)");
        }
    } else if (!flags.ip || !flags.z_eff) {
        throw UsageError("specify --atom or both --ip and --zeff");
    }
    if (flags.ip) atom.ip = *flags.ip;
    if (flags.z_eff) atom.z_eff = *flags.z_eff;
    if (atom.label.empty()) atom.label = "custom";
    if (!(atom.ip > 0.0) || !(atom.z_eff > 0.0)) {
        throw UsageError("--ip and --zeff must be positive");
    }
    return atom;
}

double resolve_omega0(const CommonFlags& flags) {
    if (flags.omega0) {
        if (!(*flags.omega0 > 0.0)) throw UsageError("--omega0 must be positive");
        return *flags.omega0;
    }
    std::fprintf(stderr, "note: --omega0 not given, using 0.062 au (735 nm)\n");
    return kDefaultOmega0;
}

double resolve_ellipticity(const CommonFlags& flags) {
    if (!(flags.ellipticity >= 0.0 && flags.ellipticity <= 1.0)) {
        throw UsageError("--ellipticity must lie in [0, 1]");
    }
    return flags.ellipticity;
}

Regime parse_model(const std::string& name) {
    if (name == "adiabatic") return Regime::Adiabatic;
    if (name == "nonadiabatic") return Regime::Nonadiabatic;
    if (name == "intermediate") return Regime::Intermediate;
    if (name == "keldysh") return Regime::Keldysh;
    throw UsageError("unknown model '" + name +
                     "' (expected adiabatic, nonadiabatic, intermediate or keldysh)");
}

std::string geometry_json(const BarrierGeometry& g) {
    std::string out = "{";
    const auto field = [&out](const char* name, double value, bool first = false) {
        if (!first) out += ',';
        out += '"';
        out += name;
        out += "\":";
        out += format_g9(value);
    };
    field("f_a", g.f_a, true);
    field("delta_z", g.delta_z);
    field("x_e_minus", g.x_e_minus);
    field("x_e_plus", g.x_e_plus);
    field("d_b", g.d_b);
    field("x_m", g.x_m);
    field("h_m_plus", g.h_m_plus);
    field("h_m_minus", g.h_m_minus);
    field("mean_height", g.mean_height);
    field("x_c", g.x_c);
    field("x_i", g.x_i);
    field("x_a", g.x_a);
    out += '}';
    return out;
}

int run_potential(const CommonFlags& flags, double f, double xmin, double xmax, int samples) {
    if (!(xmin > 0.0) || !(xmin < xmax)) {
        throw UsageError("require 0 < xmin < xmax");
    }
    if (samples < 2) {
        throw UsageError("require samples >= 2");
    }
    const AtomSpec atom = resolve_atom(flags);
    const BarrierGeometry geometry = barrier_geometry(atom, f);  // rejects BSI

    std::string out = "# " + geometry_json(geometry) + "\n";
    out += "x_au,v_au,v_eff_au\n";
    for (int i = 0; i < samples; ++i) {
        const double x = i == samples - 1 ? xmax : xmin + i * (xmax - xmin) / (samples - 1);
        out += format_g9(x);
        out += ',';
        out += format_g9(coulomb_potential(atom, x));
        out += ',';
        out += format_g9(effective_potential(atom, f, x));
        out += '\n';
    }
    std::fputs(out.c_str(), stdout);
    return 0;
}

ModelConfig build_model_config(const CommonFlags& flags, const std::string& model,
                               bool stark, std::optional<int> delta_nu,
                               std::optional<double> delta_eps, double omega0) {
    ModelConfig config{parse_model(model), resolve_atom(flags),
                       PulseSpec{1.0, omega0, resolve_ellipticity(flags)}};
    config.stark = stark;
    if (delta_nu && delta_eps) {
        throw UsageError("--delta-nu and --delta-eps are mutually exclusive");
    }
    if (delta_nu) {
        if (*delta_nu < 0) throw UsageError("--delta-nu must be non-negative");
        config.delta_eps_au = *delta_nu * omega0;
    }
    if (delta_eps) {
        if (*delta_eps < 0.0) throw UsageError("--delta-eps must be non-negative");
        config.delta_eps_au = *delta_eps;
    }
    return config;
}

int run_sweep(const ModelConfig& config, double fmin, double fmax, int steps,
              const std::string& unit) {
    if (!(fmin > 0.0) || !(fmin <= fmax)) {
        throw UsageError("require 0 < fmin <= fmax");
    }
    if (steps < 1) {
        throw UsageError("require steps >= 1");
    }
    if (unit != "as" && unit != "au") {
        throw UsageError("--unit must be 'as' or 'au'");
    }
    const auto grid = linear_grid(fmin, fmax, steps);
    const auto rows = sweep(config, grid);
    write_sweep_csv(std::cout, rows);
    std::cout.flush();

    // stderr summary in the requested unit; the CSV always carries both
    int flagged = 0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const SweepRow& row : rows) {
        if (std::isnan(row.tau_au)) {
            ++flagged;
            continue;
        }
        const double tau = unit == "au" ? row.tau_au : row.tau_as;
        lo = std::min(lo, tau);
        hi = std::max(hi, tau);
    }
    if (lo <= hi) {
        std::fprintf(stderr, "sweep: %zu rows (%d flagged), tau %s..%s %s\n", rows.size(),
                     flagged, format_g9(lo).c_str(), format_g9(hi).c_str(), unit.c_str());
    } else {
        std::fprintf(stderr, "sweep: %zu rows, none evaluable\n", rows.size());
    }
    return 0;
}

int run_compare(const ModelConfig& config, const std::string& data_path, double sigma_floor) {
    if (!(sigma_floor > 0.0)) {
        throw UsageError("--sigma-floor must be positive");
    }
    const auto dataset = load_dataset(data_path);
    const ComparisonReport report = compare(dataset, config, CompareOptions{sigma_floor});
    std::cout << comparison_report_json(report) << '\n';
    return 0;
}

int run_convert(const CommonFlags& flags, std::optional<double> angle,
                std::optional<double> au_time, std::optional<double> field,
                double angle_scale) {
    const int selected = (angle ? 1 : 0) + (au_time ? 1 : 0) + (field ? 1 : 0);
    if (selected != 1) {
        throw UsageError("select exactly one of --angle, --au-time, --field");
    }
    if (angle) {
        const double omega0 = resolve_omega0(flags);
        std::cout << format_g9(angle_to_delay(*angle, omega0, angle_scale)) << " as\n";
    } else if (au_time) {
        std::cout << format_g9(au_time_to_attoseconds(*au_time)) << " as\n";
    } else {
        std::cout << format_g9(field_to_intensity(*field)) << " W/cm^2\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analytic attoclock tunneling/field-ionization delay models"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string model = "nonadiabatic";
    bool stark = false;
    std::optional<int> delta_nu;
    std::optional<double> delta_eps;
    std::string unit = "as";

    auto* potential = app.add_subcommand("potential", "sample V(x) and V_eff(x) as CSV");
    double field = 0.0;
    double xmin = 0.5;
    double xmax = 20.0;
    int samples = 200;
    add_atom_flags(potential, flags);
    potential->add_option("--field", field, "peak field strength, au")->required();
    potential->add_option("--xmin", xmin, "first sample position, au");
    potential->add_option("--xmax", xmax, "last sample position, au");
    potential->add_option("--samples", samples, "number of samples (>= 2)");

    auto* sweep_cmd = app.add_subcommand("sweep", "delay model over a field grid as CSV");
    double fmin = 0.0;
    double fmax = 0.0;
    int steps = 1;
    add_atom_flags(sweep_cmd, flags);
    sweep_cmd->add_option("--model", model, "adiabatic|nonadiabatic|intermediate|keldysh");
    sweep_cmd->add_option("--fmin", fmin, "grid start, au")->required();
    sweep_cmd->add_option("--fmax", fmax, "grid end, au")->required();
    sweep_cmd->add_option("--steps", steps, "grid size (endpoints inclusive)")->required();
    sweep_cmd->add_option("--omega0", flags.omega0, "central frequency, au");
    sweep_cmd->add_option("--delta-nu", delta_nu, "intermediate photon offset");
    sweep_cmd->add_option("--delta-eps", delta_eps, "intermediate energy offset, au");
    sweep_cmd->add_flag("--stark", stark, "apply the ponderomotive level shift");
    sweep_cmd->add_option("--unit", unit, "stderr summary unit: as|au");

    auto* compare_cmd = app.add_subcommand("compare", "dataset vs model, JSON report");
    std::string data_path;
    double sigma_floor = 0.5;
    add_atom_flags(compare_cmd, flags);
    compare_cmd->add_option("--model", model, "adiabatic|nonadiabatic|intermediate|keldysh");
    compare_cmd->add_option("--data", data_path, "dataset CSV path")->required();
    compare_cmd->add_option("--omega0", flags.omega0, "central frequency, au");
    compare_cmd->add_option("--delta-nu", delta_nu, "intermediate photon offset");
    compare_cmd->add_option("--delta-eps", delta_eps, "intermediate energy offset, au");
    compare_cmd->add_flag("--stark", stark, "apply the ponderomotive level shift");
    compare_cmd->add_option("--sigma-floor", sigma_floor, "lower bound on per-point sigma, as");

    auto* convert = app.add_subcommand("convert", "single unit conversion");
    std::optional<double> angle;
    std::optional<double> au_time;
    std::optional<double> conv_field;
    double angle_scale = 1.0;
    convert->add_option("--angle", angle, "offset angle, degrees");
    convert->add_option("--omega0", flags.omega0, "central frequency, au");
    convert->add_option("--au-time", au_time, "time, atomic units");
    convert->add_option("--field", conv_field, "field strength, au");
    convert->add_option("--angle-scale", angle_scale, "clock conversion factor");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (potential->parsed()) {
            return run_potential(flags, field, xmin, xmax, samples);
        }
        if (sweep_cmd->parsed()) {
            const double omega0 = resolve_omega0(flags);
            return run_sweep(
                build_model_config(flags, model, stark, delta_nu, delta_eps, omega0), fmin,
                fmax, steps, unit);
        }
        if (compare_cmd->parsed()) {
            const double omega0 = resolve_omega0(flags);
            return run_compare(
                build_model_config(flags, model, stark, delta_nu, delta_eps, omega0),
                data_path, sigma_floor);
        }
        if (convert->parsed()) {
            return run_convert(flags, angle, au_time, conv_field, angle_scale);
        }
        throw UsageError("no subcommand selected");
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const BarrierSuppressedError& e) {
        std::fprintf(stderr, "error: %s (BSI)\n", e.what());
        return 3;
    } catch (const SaturationExceededError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const EmptyComparisonError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (...) {
        std::fprintf(stderr, "error: unknown failure\n");
        return 1;
    }
}
