#ifndef KEMPE_RNG_HPP
#define KEMPE_RNG_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace kempe {

/// Deterministic RNG wrapper. Draws raw mt19937_64 words only, so a seed
/// pins every generated instance bit-for-bit across standard libraries.
struct SeededRng {
    std::mt19937_64 eng;

    explicit SeededRng(uint64_t seed) : eng(seed) {}

    uint64_t below(uint64_t n) { // uniform in [0, n), n >= 1
        uint64_t bound =
            std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
        uint64_t x;
        do {
            x = eng();
        } while (x >= bound);
        return x % n;
    }

    int range(int lo, int hi) { // uniform in [lo, hi]
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

    int pick(const std::vector<int>& options) {
        return options[static_cast<size_t>(below(options.size()))];
    }
};

} // namespace kempe

#endif
