#pragma once

#include <cmath>
#include <cstdint>

namespace ramsey {

namespace detail {

// Uniform on (0, 1], 53 bits.
template <class Urbg>
double open_unit(Urbg& rng) {
    const std::uint64_t bits = static_cast<std::uint64_t>(rng()) >> 11;
    return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
}

}  // namespace detail

// Gamma(2, 1) is the sum of two unit exponentials.
template <class Urbg>
double sample_maxwell(Urbg& rng) {
    const double u = -std::log(detail::open_unit(rng)) - std::log(detail::open_unit(rng));
    return std::sqrt(u);
}

}  // namespace ramsey
