#include "attoclock/photons.hpp"

#include <algorithm>
#include <cmath>

namespace attoclock {

EnergyPartition energy_partition(const AtomSpec& atom, const PulseSpec& pulse) {
    validate(pulse);
    const double dz = delta_z(atom, pulse.f);

    EnergyPartition p;
    p.delta_z = dz;
    // Ip - delta_z evaluated as 4 Z_eff F/(Ip + delta_z): immune to the
    // cancellation at small fields where delta_z -> Ip.
    p.epsilon_f = 4.0 * atom.z_eff * pulse.f / (atom.ip + dz);
    p.v_f_energy = p.epsilon_f;
    p.delta_e_threshold = p.epsilon_f;
    p.n_ip = static_cast<int>(std::floor(atom.ip / pulse.omega0));
    const double nf = std::floor(dz / pulse.omega0);
    p.n_f = static_cast<int>(nf);
    p.residual_gap = dz - nf * pulse.omega0;
    return p;
}

int photon_count_approx(const AtomSpec& atom, const PulseSpec& pulse) {
    validate(pulse);
    delta_z(atom, pulse.f);  // range check: rejects f <= 0 and BSI
    const double f_a = atomic_field_strength(atom);
    const double n_ip = std::floor(atom.ip / pulse.omega0);
    const double depletion = std::sqrt(std::max(0.0, 1.0 - pulse.f / f_a));
    return static_cast<int>(std::floor(n_ip * depletion));
}

}  // namespace attoclock
