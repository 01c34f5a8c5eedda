#pragma once

#include <cstdint>
#include <random>

#include "ramsey/detail/maxwell_sampling.hpp"

namespace ramsey::test {

// Seeded uniform draws for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return lo + (hi - lo) * detail::open_unit(rng_); }
    int integer(int lo, int hi) {
        return lo + static_cast<int>(uniform(0.0, 1.0) * (hi - lo + 1) - 1e-12);
    }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace ramsey::test
