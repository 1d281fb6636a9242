#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace piquant::detail {

// mt19937_64 with a hand-rolled uniform mapping so that fixed seeds give
// identical streams on every platform (uniform_real_distribution is
// implementation-defined).
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : gen_(seed) {}

    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // log-uniform on [1/radius, radius]
    double log_box(double radius) {
        return std::exp((2.0 * uniform01() - 1.0) * std::log(radius));
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace piquant::detail
