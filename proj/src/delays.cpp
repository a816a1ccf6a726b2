#include "attoclock/delays.hpp"

#include <cmath>
#include <stdexcept>

#include "attoclock/errors.hpp"

namespace attoclock {

namespace {

// tau_t_d = 1/(2(Ip - delta_z)) rewritten as (Ip + delta_z)/(8 Z_eff F).
// The rewritten form stays accurate when delta_z approaches Ip, where the
// direct difference cancels catastrophically; it overflows to +infinity
// (the correct sentinel) only when 8 Z_eff F underflows.
double tau_t_d_stable(const AtomSpec& atom, double f, double dz) {
    return (atom.ip + dz) / (8.0 * atom.z_eff * f);
}

}  // namespace

const char* regime_name(Regime regime) {
    switch (regime) {
        case Regime::Adiabatic: return "adiabatic";
        case Regime::Nonadiabatic: return "nonadiabatic";
        case Regime::Intermediate: return "intermediate";
        case Regime::Keldysh: return "keldysh";
    }
    return "unknown";
}

double quantum_limit_delay(const AtomSpec& atom) {
    validate(atom);
    return 1.0 / (2.0 * atom.ip);
}

DelayResult adiabatic_delay(const AtomSpec& atom, double f) {
    const double dz = delta_z(atom, f);
    const double tau_a = 1.0 / (2.0 * atom.ip);
    const double f_a = atomic_field_strength(atom);

    DelayResult r;
    r.regime = Regime::Adiabatic;
    const double tau_t_d = tau_t_d_stable(atom, f, dz);
    const double tau_t_i = 1.0 / (2.0 * (atom.ip + dz));
    const double tau_tot = atom.ip / (4.0 * atom.z_eff * f);
    r.tau_au = tau_t_d;
    r.enhancement = (f_a / f) * (1.0 + dz / atom.ip);
    r.components = {
        {"tau_a", tau_a},
        {"tau_t_i", tau_t_i},
        {"tau_t_d", tau_t_d},
        {"tau_tot", tau_tot},
    };
    return r;
}

DelayResult decompose_delay(const AtomSpec& atom, double f) {
    const double dz = delta_z(atom, f);
    const double tau_a = 1.0 / (2.0 * atom.ip);
    const double f_a = atomic_field_strength(atom);
    const double denom = 8.0 * atom.z_eff * f;

    DelayResult r;
    r.regime = Regime::Adiabatic;
    const double tau_dion = atom.ip / denom;
    const double tau_delt = dz / denom;
    r.tau_au = tau_dion + tau_delt;
    r.enhancement = (f_a / f) * (1.0 + dz / atom.ip);
    r.components = {
        {"tau_a", tau_a},
        {"tau_dion", tau_dion},
        {"tau_delt", tau_delt},
        {"tau_t_d", r.tau_au},
    };
    return r;
}

DelayResult nonadiabatic_delay(const AtomSpec& atom, const PulseSpec& pulse) {
    validate(pulse);
    const double dz = delta_z(atom, pulse.f);
    const double tau_a = 1.0 / (2.0 * atom.ip);
    const double f_a = atomic_field_strength(atom);

    // The barrier term cancels under symmetrization; the count of photons
    // that would have overcome it and the sub-photon remainder are still
    // reported. nu_f and m_f are one quantity under two conventions.
    const double nu_f = std::floor(dz / pulse.omega0);
    const double residual_gap = dz - nu_f * pulse.omega0;

    DelayResult r;
    r.regime = Regime::Nonadiabatic;
    const double tau_tot = atom.ip / (4.0 * atom.z_eff * pulse.f);
    r.tau_au = atom.ip / (8.0 * atom.z_eff * pulse.f);
    r.enhancement = f_a / pulse.f;
    r.components = {
        {"tau_a", tau_a},
        {"tau_sym", r.tau_au},
        {"tau_tot", tau_tot},
        {"nu_f", nu_f},
        {"m_f", nu_f},
        {"residual_gap", residual_gap},
    };
    return r;
}

DelayResult intermediate_delay(const AtomSpec& atom, const PulseSpec& pulse,
                               double delta_eps_au) {
    validate(pulse);
    const double dz = delta_z(atom, pulse.f);
    if (!(delta_eps_au >= 0.0)) {
        throw std::domain_error("energy offset must be non-negative");
    }
    if (delta_eps_au > dz) {
        throw SaturationExceededError(delta_eps_au, dz);
    }
    const double tau_a = 1.0 / (2.0 * atom.ip);
    const double f_a = atomic_field_strength(atom);
    const double denom = 8.0 * atom.z_eff * pulse.f;

    DelayResult r;
    r.regime = Regime::Intermediate;
    // Same form as the adiabatic tau_t_d with delta_z replaced by the
    // tunneling offset, so the saturation identity at delta_eps = delta_z
    // holds to the last bit.
    r.tau_au = (atom.ip + delta_eps_au) / denom;
    r.enhancement = (f_a / pulse.f) * (1.0 + delta_eps_au / atom.ip);
    r.delta_nu = delta_eps_au / pulse.omega0;
    // residual barrier width spanned by the tunneling step and the shifted
    // exit point x_m + d_b_nu/2 (collapses to x_m when no tunneling occurs)
    const double d_b_nu = delta_eps_au / pulse.f;
    r.components = {
        {"tau_a", tau_a},
        {"tau_dion", atom.ip / denom},
        {"delta_tau_delt", delta_eps_au / (4.0 * atom.z_eff * pulse.f)},
        {"delta_eps", delta_eps_au},
        {"d_b_nu", d_b_nu},
        {"x_exit", std::sqrt(atom.z_eff / pulse.f) + 0.5 * d_b_nu},
    };
    return r;
}

DelayResult intermediate_delay_photons(const AtomSpec& atom, const PulseSpec& pulse,
                                       int delta_nu) {
    if (delta_nu < 0) {
        throw std::domain_error("photon offset must be non-negative");
    }
    validate(pulse);
    DelayResult r = intermediate_delay(atom, pulse, delta_nu * pulse.omega0);
    r.delta_nu = delta_nu;
    return r;
}

DelayResult keldysh_delay(const AtomSpec& atom, double f) {
    validate(atom);
    if (!(f > 0.0)) {
        throw std::domain_error("peak field strength must be positive");
    }
    const double tau_a = 1.0 / (2.0 * atom.ip);
    const double f_a_keldysh = std::pow(2.0 * atom.ip, 1.5);

    DelayResult r;
    r.regime = Regime::Keldysh;
    r.tau_au = std::sqrt(2.0 * atom.ip) / f;
    r.enhancement = f_a_keldysh / f;
    r.components = {
        {"tau_a", tau_a},
        {"tau_k", r.tau_au},
    };
    return r;
}

AtomSpec stark_shifted_atom(const AtomSpec& atom, const PulseSpec& pulse) {
    validate(atom);
    if (!(pulse.omega0 > 0.0)) {
        throw std::domain_error("central frequency must be positive");
    }
    if (pulse.f < 0.0) {
        throw std::domain_error("peak field strength must be non-negative");
    }
    const double shift = pulse.f / (2.0 * pulse.omega0);
    AtomSpec shifted = atom;
    shifted.ip = atom.ip + shift * shift;
    return shifted;
}

}  // namespace attoclock
