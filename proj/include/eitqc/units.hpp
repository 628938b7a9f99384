#pragma once

#include <string>
#include <string_view>

namespace eitqc::units {

/// Parses "<number> [unit]" into SI.  Frequency units (Hz, kHz, MHz, GHz, THz)
/// are read as cyclic and converted to angular frequency (2*pi*value rad/s);
/// "rad/s" is taken as-is.  Also understood: m, cm, mm, um, nm; s, ms, us, ns;
/// m^-3, cm^-3; m^2, um^2, cm^2; V/m, V/cm; T, G; C*m, ea0; rad, deg, pi.  A bare number
/// is SI.
double parse(std::string_view text);

/// Formats a number with 12 significant digits.
std::string format(double value);

}  // namespace eitqc::units
