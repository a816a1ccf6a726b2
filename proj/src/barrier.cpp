#include "attoclock/barrier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "attoclock/errors.hpp"

namespace attoclock {

void validate(const AtomSpec& atom) {
    if (!(atom.ip > 0.0)) {
        throw std::domain_error("ionization potential must be positive");
    }
    if (!(atom.z_eff > 0.0)) {
        throw std::domain_error("effective nuclear charge must be positive");
    }
}

void validate(const PulseSpec& pulse) {
    if (!(pulse.f > 0.0)) {
        throw std::domain_error("peak field strength must be positive");
    }
    if (!(pulse.omega0 > 0.0)) {
        throw std::domain_error("central frequency must be positive");
    }
    if (!(pulse.ellipticity >= 0.0 && pulse.ellipticity <= 1.0)) {
        throw std::domain_error("ellipticity must lie in [0, 1]");
    }
}

double atomic_field_strength(const AtomSpec& atom) {
    validate(atom);
    return atom.ip * atom.ip / (4.0 * atom.z_eff);
}

double delta_z(const AtomSpec& atom, double f) {
    validate(atom);
    if (!(f > 0.0)) {
        throw std::domain_error("peak field strength must be positive");
    }
    const double ip2 = atom.ip * atom.ip;
    double radicand = ip2 - 4.0 * atom.z_eff * f;
    if (radicand < 0.0) {
        // Float noise at the BSI boundary must not produce NaN.
        if (radicand >= -1e-12 * ip2) {
            radicand = 0.0;
        } else {
            throw BarrierSuppressedError(f, atomic_field_strength(atom));
        }
    }
    return std::min(std::sqrt(radicand), atom.ip);
}

double effective_potential(const AtomSpec& atom, double f, double x) {
    validate(atom);
    if (!(x > 0.0)) {
        throw std::domain_error("position must be positive");
    }
    return -atom.z_eff / x - x * f;
}

double coulomb_potential(const AtomSpec& atom, double x) {
    validate(atom);
    if (!(x > 0.0)) {
        throw std::domain_error("position must be positive");
    }
    return -atom.z_eff / x;
}

BarrierGeometry barrier_geometry(const AtomSpec& atom, double f) {
    const double dz = delta_z(atom, f);  // validates atom and f, rejects BSI
    const double ip = atom.ip;
    const double z = atom.z_eff;
    const double f_a = atomic_field_strength(atom);
    const double half_drop = std::sqrt(4.0 * z * f);

    BarrierGeometry g;
    g.f_a = f_a;
    g.delta_z = dz;
    g.x_e_minus = (ip - dz) / (2.0 * f);
    g.x_e_plus = (ip + dz) / (2.0 * f);
    g.d_b = dz / f;
    g.x_m = std::sqrt(z / f);
    g.h_m_plus = -ip + half_drop;
    g.h_m_minus = -ip - half_drop;
    g.mean_height = dz;
    g.x_c = ip / f;
    g.x_i = z / (2.0 * ip);
    g.x_a = std::sqrt(z / f_a);
    return g;
}

KeldyshParameters keldysh(const AtomSpec& atom, const PulseSpec& pulse) {
    validate(atom);
    validate(pulse);
    KeldyshParameters k;
    k.tau_k = std::sqrt(2.0 * atom.ip) / pulse.f;
    k.gamma_k = k.tau_k * pulse.omega0;
    return k;
}

}  // namespace attoclock
