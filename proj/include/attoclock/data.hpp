#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "attoclock/delays.hpp"

namespace attoclock {

// One experimental point: delay (attoseconds) at a calibrated peak field,
// with asymmetric error-bar halves.
struct Measurement {
    double f;          // field, au
    double tau_as;     // delay, attoseconds
    double err_minus;  // attoseconds, >= 0
    double err_plus;   // attoseconds, >= 0
    std::string source;
};

// Agreement metrics of a dataset against one model curve.
struct ComparisonReport {
    int n_points;              // measurements actually compared
    double weighted_rms;       // attoseconds
    double chi2_per_dof;
    double coverage;           // fraction with the model inside the error interval
    int excluded_bsi;          // points skipped because f > f_a
    std::vector<double> residuals;  // data - model, attoseconds, in dataset order
};

// Model selector plus everything needed to evaluate it at a field value.
// pulse.f is ignored (overridden per evaluation point). delta_eps_au is
// the intermediate-regime tunneling offset, canonical continuous form.
struct ModelConfig {
    Regime model;
    AtomSpec atom;
    PulseSpec pulse;
    bool stark = false;
    double delta_eps_au = 0.0;
};

struct CompareOptions {
    double sigma_floor_as = 0.5;  // lower bound on per-point sigma
};

struct SweepRow {
    double field_au;
    double tau_au;
    double tau_as;
    double delta_z_au;
    int n_f;  // -1 when undefined
    double gamma_k;
    double x_m_au;
    double x_e_plus_au;
    double x_E_au;  // multiphoton exit point Ip/(2F) = x_c/2
    std::string status;
};

// Dataset CSV: UTF-8, comma-separated, '#' comment lines ignored,
// mandatory header naming at least field_au and delay_as (tau_as is
// accepted as an alias so sweep output feeds straight back in); optional
// err_minus_as, err_plus_as, source columns; unknown columns ignored.
std::vector<Measurement> load_dataset(const std::filesystem::path& path);

// Attoclock reading: offset angle to delay via the rigid-rotation clock
// theta/omega0 (an assumption for elliptical pulses; scale adjusts it).
double angle_to_delay(double theta_deg, double omega0, double scale = 1.0);

// Delay of the configured model at field f, with the Stark shift applied
// first when enabled. Throws BarrierSuppressedError past f_a for every
// model except Keldysh.
DelayResult evaluate_delay(const ModelConfig& config, double f);

// Model prediction in attoseconds, quantized to the 9-significant-digit
// wire precision so datasets emitted by sweep() compare exactly.
double evaluate_model_as(const ModelConfig& config, double f);

ComparisonReport compare(const std::vector<Measurement>& dataset, const ModelConfig& config,
                         const CompareOptions& options = {});

// One row per grid value, input order preserved. Each grid point is
// quantized to the 9-significant-digit wire precision before evaluation,
// so a row re-evaluated at its printed field_au reproduces the printed
// tau exactly. Rows outside the model domain are flagged in the status
// column ("bsi", "saturated", "invalid") with NaN in the columns that
// lost their meaning; nothing is fatal.
std::vector<SweepRow> sweep(const ModelConfig& config, std::span<const double> f_grid);

std::vector<double> linear_grid(double fmin, double fmax, int steps);

// header: field_au,tau_au,tau_as,delta_z_au,n_f,gamma_k,x_m_au,x_e_plus_au,x_E_au,status
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// Single-line JSON object with keys n_points, weighted_rms_as,
// chi2_per_dof, coverage, excluded_bsi, residuals_as.
std::string comparison_report_json(const ComparisonReport& report);

}  // namespace attoclock
