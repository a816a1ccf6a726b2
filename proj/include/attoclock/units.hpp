#pragma once

namespace attoclock {

// Conversion constants between atomic units and laboratory units.
// All model computation stays in atomic units; these apply at I/O
// boundaries only.
struct PhysicalConstants {
    double au_time_in_attoseconds;  // attoseconds per atomic time unit
    double intensity_factor;        // W/cm^2 per (au field)^2
    double wavelength_factor;       // nm * au, omega0 = wavelength_factor / lambda
};

// CODATA atomic unit of time; intensity and wavelength factors from the
// same conventions (1 au field = 5.14220675e9 V/cm).
inline constexpr PhysicalConstants kConstants{24.188843265857, 3.50944758e16, 45.5634};

double au_time_to_attoseconds(double t_au);
double attoseconds_to_au_time(double t_as);

// Peak intensity in W/cm^2 for a peak field strength in au. Throws
// std::domain_error for negative fields.
double field_to_intensity(double f_au);

// (F/F_a)^2, the intensity relative to the appearance intensity I_a = F_a^2.
double relative_intensity(double f_au, double f_a_au);

// Central circular frequency in au for a wavelength in nm. Throws
// std::domain_error for non-positive wavelengths.
double wavelength_to_omega(double lambda_nm);

}  // namespace attoclock
