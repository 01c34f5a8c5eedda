#pragma once

#include <numbers>

// Internal convention: angular frequencies in rad/s, times in s.
// External interfaces (config files, CSV) use GHz for cyclic frequency and ns for time.
namespace ramsey::units {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

constexpr double ghz_to_angular(double f_ghz) noexcept { return two_pi * 1e9 * f_ghz; }
constexpr double angular_to_ghz(double omega) noexcept { return omega / (two_pi * 1e9); }
constexpr double angular_to_mhz(double omega) noexcept { return omega / (two_pi * 1e6); }
constexpr double ns_to_s(double t_ns) noexcept { return t_ns * 1e-9; }
constexpr double s_to_ns(double t_s) noexcept { return t_s * 1e9; }

}  // namespace ramsey::units
