#include "attoclock/units.hpp"

#include <stdexcept>

namespace attoclock {

double au_time_to_attoseconds(double t_au) {
    return t_au * kConstants.au_time_in_attoseconds;
}

double attoseconds_to_au_time(double t_as) {
    return t_as / kConstants.au_time_in_attoseconds;
}

double field_to_intensity(double f_au) {
    if (f_au < 0.0) {
        throw std::domain_error("field strength must be non-negative");
    }
    return kConstants.intensity_factor * f_au * f_au;
}

double relative_intensity(double f_au, double f_a_au) {
    if (f_au < 0.0 || f_a_au <= 0.0) {
        throw std::domain_error("fields must be non-negative with F_a > 0");
    }
    const double ratio = f_au / f_a_au;
    return ratio * ratio;
}

double wavelength_to_omega(double lambda_nm) {
    if (!(lambda_nm > 0.0)) {
        throw std::domain_error("wavelength must be positive");
    }
    return kConstants.wavelength_factor / lambda_nm;
}

}  // namespace attoclock
