#pragma once

#include <map>
#include <string>

#include "attoclock/barrier.hpp"

namespace attoclock {

enum class Regime {
    Adiabatic,
    Nonadiabatic,
    Intermediate,
    Keldysh,
};

const char* regime_name(Regime regime);

// One delay evaluation. tau_au is the primary value; components holds the
// named terms of the underlying decomposition; enhancement is the
// dimensionless factor multiplying the quantum limit tau_a = 1/(2 Ip).
// Unbounded small-field limits are reported as +infinity, never NaN.
struct DelayResult {
    double tau_au;
    Regime regime;
    std::map<std::string, double> components;
    double enhancement;
    double delta_nu = 0.0;  // photon offset, intermediate regime only
};

// Lower quantum limit tau_a = 1/(2 Ip), reached at f = f_a.
double quantum_limit_delay(const AtomSpec& atom);

// Adiabatic T-time: tau_t_d = 1/(2(Ip - delta_z)) with its companion
// terms tau_t_i = 1/(2(Ip + delta_z)) and tau_tot = Ip/(4 Z_eff F).
DelayResult adiabatic_delay(const AtomSpec& atom, double f);

// Adiabatic T-time split into the field-ionization delay
// tau_dion = tau_a F_a/F and the barrier term tau_delt = tau_a (F_a/F)(delta_z/Ip);
// the two sum exactly to tau_t_d.
DelayResult decompose_delay(const AtomSpec& atom, double f);

// Symmetrized (nonadiabatic) delay tau_sym = Ip/(8 Z_eff F) = tau_tot/2,
// with the photon count nu_f = floor(delta_z/omega0) and the residual
// energy gap delta_z - nu_f omega0 in [0, omega0).
DelayResult nonadiabatic_delay(const AtomSpec& atom, const PulseSpec& pulse);

// Intermediate regime: multiphoton absorption followed by tunneling just
// below the barrier top. delta_eps_au in [0, delta_z] interpolates from
// the nonadiabatic delay (0) to the adiabatic saturation value (delta_z).
// Throws SaturationExceededError beyond delta_z.
DelayResult intermediate_delay(const AtomSpec& atom, const PulseSpec& pulse,
                               double delta_eps_au);

// Photon-count form of the above, delta_eps = delta_nu * omega0.
DelayResult intermediate_delay_photons(const AtomSpec& atom, const PulseSpec& pulse,
                                       int delta_nu);

// Delay from the Keldysh-style atomic field (2 Ip)^(3/2): reduces to the
// Keldysh time sqrt(2 Ip)/F. Defined for every f > 0.
DelayResult keldysh_delay(const AtomSpec& atom, double f);

// Copy of atom with the ponderomotive level shift applied:
// Ip -> Ip + (F/(2 omega0))^2.
AtomSpec stark_shifted_atom(const AtomSpec& atom, const PulseSpec& pulse);

}  // namespace attoclock
