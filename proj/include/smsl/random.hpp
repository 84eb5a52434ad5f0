#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace smsl {

// Seeded engine plus distribution helpers with platform-independent output
// (the standard distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_{seed} {}

    // Uniform in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return draw % bound;
    }

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
    std::mt19937_64 engine_;
};

} // namespace smsl
