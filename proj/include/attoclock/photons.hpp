#pragma once

#include "attoclock/barrier.hpp"

namespace attoclock {

// Energy-conservation split of the ionization potential at peak field F:
// Ip = epsilon_f + delta_z, with the barrier share delta_z carried by
// ~n_f real photons and the scattering share epsilon_f by "imaginary"
// (virtual) photons, reported as energy only.
struct EnergyPartition {
    double epsilon_f;          // Ip - delta_z, scattering/virtual share, au
    double delta_z;            // barrier height share, au
    int n_ip;                  // floor(Ip/omega0)
    int n_f;                   // floor(delta_z/omega0)
    double v_f_energy;         // virtual-photon share as energy (= epsilon_f), au
    double residual_gap;       // delta_z - n_f omega0, in [0, omega0)
    double delta_e_threshold;  // Ip - delta_z, the uncertainty-relation gap, au
};

EnergyPartition energy_partition(const AtomSpec& atom, const PulseSpec& pulse);

// floor(n_ip sqrt(1 - F/F_a)): closed-form approximation to n_f, within
// one photon of it over the experimental field range.
int photon_count_approx(const AtomSpec& atom, const PulseSpec& pulse);

}  // namespace attoclock
