#pragma once

#include <string>

namespace attoclock {

// Single-active-electron target: ionization potential and effective
// nuclear charge, both in atomic units.
struct AtomSpec {
    double ip;     // ionization potential, au
    double z_eff;  // effective nuclear charge
    std::string label;
};

// Laser pulse at the envelope maximum. The field f is the peak electric
// field strength; ellipticity is carried as metadata only.
struct PulseSpec {
    double f;       // peak field strength, au
    double omega0;  // central circular frequency, au
    double ellipticity = 0.87;
};

// Geometry of the field-suppressed Coulomb barrier (all lengths and
// energies in au). Valid for 0 < f <= f_a; the barrier collapses to the
// single point x_m = x_a at f = f_a.
struct BarrierGeometry {
    double f_a;          // atomic field strength Ip^2/(4 Z_eff)
    double delta_z;      // sqrt(Ip^2 - 4 Z_eff F), mean barrier height
    double x_e_minus;    // entrance point (Ip - delta_z)/(2F)
    double x_e_plus;     // exit point (Ip + delta_z)/(2F)
    double d_b;          // barrier width delta_z/F
    double x_m;          // barrier maximum position sqrt(Z_eff/F)
    double h_m_plus;     // -Ip + sqrt(4 Z_eff F)
    double h_m_minus;    // -Ip - sqrt(4 Z_eff F)
    double mean_height;  // |h_m_plus h_m_minus|^(1/2) = delta_z
    double x_c;          // "classical" exit point Ip/F
    double x_i;          // initial point Z_eff/(2 Ip)
    double x_a;          // x_m at f = f_a
};

struct KeldyshParameters {
    double gamma_k;  // sqrt(2 Ip)/F * omega0
    double tau_k;    // Keldysh time sqrt(2 Ip)/F, au
};

// Throw std::domain_error when a spec violates its invariants.
void validate(const AtomSpec& atom);
void validate(const PulseSpec& pulse);

// Threshold field above which the barrier is fully suppressed.
double atomic_field_strength(const AtomSpec& atom);

// Mean barrier height sqrt(Ip^2 - 4 Z_eff F). Exactly 0 at f = f_a;
// radicand noise within 1e-12 Ip^2 of zero is clamped before the root.
// Throws BarrierSuppressedError for f > f_a, std::domain_error for f <= 0.
double delta_z(const AtomSpec& atom, double f);

// One-dimensional effective potential -Z_eff/x - x F for x > 0.
double effective_potential(const AtomSpec& atom, double f, double x);

// Bare Coulomb part -Z_eff/x.
double coulomb_potential(const AtomSpec& atom, double x);

BarrierGeometry barrier_geometry(const AtomSpec& atom, double f);

// Defined for every f > 0, including the barrier-suppression regime.
KeldyshParameters keldysh(const AtomSpec& atom, const PulseSpec& pulse);

}  // namespace attoclock
