#include "eitqc/units.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <utility>

#include "eitqc/constants.hpp"
#include "eitqc/types.hpp"

namespace eitqc::units {
namespace {

constexpr std::array<std::pair<std::string_view, double>, 32> kUnits{{
    {"rad/s", 1.0},
    {"Hz", constants::two_pi},
    {"kHz", constants::two_pi * 1e3},
    {"MHz", constants::two_pi * 1e6},
    {"GHz", constants::two_pi * 1e9},
    {"THz", constants::two_pi * 1e12},
    {"1/s", 1.0},
    {"m", 1.0},
    {"cm", 1e-2},
    {"mm", 1e-3},
    {"um", 1e-6},
    {"nm", 1e-9},
    {"s", 1.0},
    {"ms", 1e-3},
    {"us", 1e-6},
    {"ns", 1e-9},
    {"m^-3", 1.0},
    {"cm^-3", 1e6},
    {"m^2", 1.0},
    {"cm^2", 1e-4},
    {"um^2", 1e-12},
    {"1/m", 1.0},
    {"1/cm", 1e2},
    {"V/m", 1.0},
    {"V/cm", 1e2},
    {"T", 1.0},
    {"G", 1e-4},
    {"C*m", 1.0},
    {"ea0", constants::e * constants::a0},
    {"rad", 1.0},
    {"deg", constants::pi / 180.0},
    {"pi", constants::pi},
}};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

double parse(std::string_view text) {
  const std::string_view s = trim(text);
  double value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{}) throw DomainError("not a number: '" + std::string(text) + "'");
  const std::string_view unit = trim(std::string_view(ptr, static_cast<std::size_t>(s.data() + s.size() - ptr)));
  if (unit.empty()) return value;
  for (const auto& [name, scale] : kUnits)
    if (name == unit) return value * scale;
  throw DomainError("unknown unit '" + std::string(unit) + "' in '" + std::string(text) + "'");
}

std::string format(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

}  // namespace eitqc::units
