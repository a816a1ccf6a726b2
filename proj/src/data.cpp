#include "attoclock/data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string_view>

#include "attoclock/errors.hpp"
#include "attoclock/format.hpp"
#include "attoclock/photons.hpp"
#include "attoclock/units.hpp"

namespace attoclock {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> fields;
    size_t start = 0;
    while (true) {
        const size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

struct ColumnMap {
    int field = -1;
    int delay = -1;
    int err_minus = -1;
    int err_plus = -1;
    int source = -1;
};

ColumnMap parse_header(std::string_view line, long line_no) {
    ColumnMap map;
    const auto names = split_csv(line);
    for (int i = 0; i < static_cast<int>(names.size()); ++i) {
        const std::string_view name = names[i];
        if (name == "field_au") map.field = i;
        else if (name == "delay_as" || name == "tau_as") map.delay = i;
        else if (name == "err_minus_as") map.err_minus = i;
        else if (name == "err_plus_as") map.err_plus = i;
        else if (name == "source") map.source = i;
        // anything else (sweep diagnostics etc.) is ignored
    }
    if (map.field < 0 || map.delay < 0) {
        throw ParseError("header must name field_au and delay_as (or tau_as) columns", line_no);
    }
    return map;
}

// Optional columns (negative index, short row, empty cell) fall back to
// their default; required ones must be present and parseable.
double parse_cell(const std::vector<std::string_view>& cells, int index, double fallback,
                  bool required, long line_no, const char* what) {
    const bool absent =
        index < 0 || index >= static_cast<int>(cells.size()) || cells[index].empty();
    if (absent) {
        if (required) {
            throw ParseError(std::string("missing ") + what + " column value", line_no);
        }
        return fallback;
    }
    double value;
    if (!parse_double(cells[index], value)) {
        throw ParseError(std::string("cannot parse ") + what + " value '" +
                             std::string(cells[index]) + "'",
                         line_no);
    }
    return value;
}

}  // namespace

std::vector<Measurement> load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open dataset file '" + path.string() + "'");
    }

    std::vector<Measurement> dataset;
    std::optional<ColumnMap> columns;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        if (!columns) {
            columns = parse_header(content, line_no);
            continue;
        }
        const auto cells = split_csv(content);
        Measurement m;
        m.f = parse_cell(cells, columns->field, 0.0, true, line_no, "field_au");
        m.tau_as = parse_cell(cells, columns->delay, 0.0, true, line_no, "delay");
        m.err_minus = parse_cell(cells, columns->err_minus, 0.0, false, line_no, "err_minus_as");
        m.err_plus = parse_cell(cells, columns->err_plus, 0.0, false, line_no, "err_plus_as");
        if (columns->source >= 0 && columns->source < static_cast<int>(cells.size())) {
            m.source = std::string(cells[columns->source]);
        }
        if (!(m.f > 0.0)) {
            throw ValidationError("field_au must be positive", line_no);
        }
        if (m.err_minus < 0.0 || m.err_plus < 0.0) {
            throw ValidationError("error bars must be non-negative", line_no);
        }
        dataset.push_back(std::move(m));
    }
    if (!columns) {
        throw ParseError("dataset has no header row");
    }
    return dataset;
}

double angle_to_delay(double theta_deg, double omega0, double scale) {
    if (!(omega0 > 0.0)) {
        throw std::domain_error("central frequency must be positive");
    }
    const double theta_rad = theta_deg * std::numbers::pi / 180.0;
    return au_time_to_attoseconds(scale * theta_rad / omega0);
}

DelayResult evaluate_delay(const ModelConfig& config, double f) {
    PulseSpec pulse = config.pulse;
    pulse.f = f;
    const AtomSpec atom =
        config.stark ? stark_shifted_atom(config.atom, pulse) : config.atom;
    switch (config.model) {
        case Regime::Adiabatic: return adiabatic_delay(atom, f);
        case Regime::Nonadiabatic: return nonadiabatic_delay(atom, pulse);
        case Regime::Intermediate: return intermediate_delay(atom, pulse, config.delta_eps_au);
        case Regime::Keldysh: return keldysh_delay(atom, f);
    }
    throw std::logic_error("unknown delay model");
}

double evaluate_model_as(const ModelConfig& config, double f) {
    return wire_round(au_time_to_attoseconds(evaluate_delay(config, f).tau_au));
}

ComparisonReport compare(const std::vector<Measurement>& dataset, const ModelConfig& config,
                         const CompareOptions& options) {
    if (dataset.empty()) {
        throw EmptyComparisonError("dataset is empty");
    }
    if (!(options.sigma_floor_as > 0.0)) {
        throw std::domain_error("sigma floor must be positive");
    }

    ComparisonReport report{};
    double sum_w = 0.0;
    double sum_wr2 = 0.0;
    double sum_chi2 = 0.0;
    int covered = 0;
    for (const Measurement& m : dataset) {
        double model;
        try {
            model = evaluate_model_as(config, m.f);
        } catch (const BarrierSuppressedError&) {
            ++report.excluded_bsi;
            continue;
        }
        const double r = m.tau_as - model;
        const double sigma = std::max({m.err_minus, m.err_plus, options.sigma_floor_as});
        const double w = 1.0 / (sigma * sigma);
        sum_w += w;
        sum_wr2 += w * r * r;
        sum_chi2 += (r / sigma) * (r / sigma);
        if (model >= m.tau_as - m.err_minus && model <= m.tau_as + m.err_plus) {
            ++covered;
        }
        report.residuals.push_back(r);
        ++report.n_points;
    }
    if (report.n_points == 0) {
        throw EmptyComparisonError("all points excluded: fields beyond the atomic field strength");
    }
    report.weighted_rms = std::sqrt(sum_wr2 / sum_w);
    report.chi2_per_dof = sum_chi2 / report.n_points;
    report.coverage = static_cast<double>(covered) / report.n_points;
    return report;
}

std::vector<double> linear_grid(double fmin, double fmax, int steps) {
    if (steps < 1) {
        throw std::domain_error("steps must be at least 1");
    }
    if (!(fmin <= fmax)) {
        throw std::domain_error("fmin must not exceed fmax");
    }
    std::vector<double> grid;
    grid.reserve(static_cast<size_t>(steps));
    if (steps == 1) {
        grid.push_back(fmin);
        return grid;
    }
    for (int i = 0; i < steps; ++i) {
        grid.push_back(i == steps - 1 ? fmax
                                      : fmin + i * (fmax - fmin) / (steps - 1));
    }
    return grid;
}

std::vector<SweepRow> sweep(const ModelConfig& config, std::span<const double> f_grid) {
    std::vector<SweepRow> rows;
    rows.reserve(f_grid.size());
    for (const double raw_f : f_grid) {
        // evaluate at the wire-quantized field so every emitted row is
        // exactly reproducible from its own printed field_au
        const double f = wire_round(raw_f);
        SweepRow row;
        row.field_au = f;
        row.tau_au = kNan;
        row.tau_as = kNan;
        row.delta_z_au = kNan;
        row.n_f = -1;
        row.gamma_k = kNan;
        row.x_m_au = kNan;
        row.x_e_plus_au = kNan;
        row.x_E_au = kNan;
        if (!(f > 0.0) || !std::isfinite(f)) {
            row.status = "invalid";
            rows.push_back(std::move(row));
            continue;
        }

        PulseSpec pulse = config.pulse;
        pulse.f = f;
        const AtomSpec atom =
            config.stark ? stark_shifted_atom(config.atom, pulse) : config.atom;
        row.gamma_k = keldysh(atom, pulse).gamma_k;

        try {
            const BarrierGeometry geom = barrier_geometry(atom, f);
            row.delta_z_au = geom.delta_z;
            row.x_m_au = geom.x_m;
            row.x_e_plus_au = geom.x_e_plus;
            row.x_E_au = atom.ip / (2.0 * f);
            row.n_f = energy_partition(atom, pulse).n_f;
            row.status = "ok";
        } catch (const BarrierSuppressedError&) {
            row.status = "bsi";
        }

        if (row.status == "ok" || config.model == Regime::Keldysh) {
            try {
                row.tau_au = evaluate_delay(config, f).tau_au;
                row.tau_as = au_time_to_attoseconds(row.tau_au);
            } catch (const SaturationExceededError&) {
                row.status = "saturated";
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "field_au,tau_au,tau_as,delta_z_au,n_f,gamma_k,x_m_au,x_e_plus_au,x_E_au,status\n";
    for (const SweepRow& row : rows) {
        out << format_g9(row.field_au) << ',' << format_g9(row.tau_au) << ','
            << format_g9(row.tau_as) << ',' << format_g9(row.delta_z_au) << ','
            << (row.n_f < 0 ? std::string("nan") : std::to_string(row.n_f)) << ','
            << format_g9(row.gamma_k) << ',' << format_g9(row.x_m_au) << ','
            << format_g9(row.x_e_plus_au) << ',' << format_g9(row.x_E_au) << ','
            << row.status << '\n';
    }
}

std::string comparison_report_json(const ComparisonReport& report) {
    std::ostringstream out;
    out << "{\"n_points\":" << report.n_points
        << ",\"weighted_rms_as\":" << format_g9(report.weighted_rms)
        << ",\"chi2_per_dof\":" << format_g9(report.chi2_per_dof)
        << ",\"coverage\":" << format_g9(report.coverage)
        << ",\"excluded_bsi\":" << report.excluded_bsi << ",\"residuals_as\":[";
    for (size_t i = 0; i < report.residuals.size(); ++i) {
        if (i > 0) out << ',';
        out << format_g9(report.residuals[i]);
    }
    out << "]}";
    return out.str();
}

}  // namespace attoclock
