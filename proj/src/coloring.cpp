#include "kempe/coloring.hpp"

#include <string>

#include "kempe/errors.hpp"

namespace kempe {

Coloring::Coloring(int k, const std::vector<int>& colors) : k_(k) {
    if (k < 1) throw input_error("palette size must be >= 1");
    if (k > 255) throw input_error("palette size above 255 unsupported");
    raw_.reserve(colors.size());
    for (size_t v = 0; v < colors.size(); ++v) {
        int c = colors[v];
        if (c < 1 || c > k)
            throw input_error("color " + std::to_string(c) + " at vertex " +
                              std::to_string(v) + " outside 1.." + std::to_string(k));
        raw_.push_back(static_cast<uint8_t>(c - 1));
    }
}

std::vector<int> Coloring::colors() const {
    std::vector<int> out;
    out.reserve(raw_.size());
    for (uint8_t c : raw_) out.push_back(static_cast<int>(c) + 1);
    return out;
}

Coloring Coloring::from_raw(int k, std::vector<uint8_t> raw) {
    if (k < 1 || k > 255) throw input_error("palette size out of range");
    for (uint8_t c : raw)
        if (c >= k) throw input_error("raw color value out of range");
    Coloring out;
    out.k_ = k;
    out.raw_ = std::move(raw);
    return out;
}

uint64_t fingerprint_raw(int k, const std::vector<uint8_t>& raw) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint8_t byte) {
        h ^= byte;
        h *= 1099511628211ull;
    };
    mix(static_cast<uint8_t>(k));
    for (uint8_t c : raw) mix(c);
    return h;
}

uint64_t Coloring::fingerprint() const { return fingerprint_raw(k_, raw_); }

bool Coloring::operator<(const Coloring& other) const {
    if (k_ != other.k_) return k_ < other.k_;
    return raw_ < other.raw_;
}

} // namespace kempe
