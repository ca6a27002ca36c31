#ifndef KEMPE_COLORING_HPP
#define KEMPE_COLORING_HPP

#include <cstdint>
#include <vector>

namespace kempe {

/// Assignment of colors 1..k to vertices 0..n-1. Colors are 1-based in the
/// whole public API (matching the usual palette naming); storage is 0-based.
/// Immutable after construction.
class Coloring {
public:
    Coloring() = default;
    // `colors` uses 1-based values; every entry must lie in 1..k.
    Coloring(int k, const std::vector<int>& colors);

    int k() const { return k_; }
    int size() const { return static_cast<int>(raw_.size()); }
    int color(int v) const { return raw_[static_cast<size_t>(v)] + 1; }
    std::vector<int> colors() const; // 1-based copy

    // 0-based storage, for tight loops and hashing inside the library.
    const std::vector<uint8_t>& raw() const { return raw_; }
    static Coloring from_raw(int k, std::vector<uint8_t> raw);

    // FNV-1a over (k, raw bytes); used to detect stale Kempe components.
    uint64_t fingerprint() const;

    bool operator==(const Coloring& other) const = default;
    bool operator<(const Coloring& other) const; // lex on color vector

private:
    int k_ = 0;
    std::vector<uint8_t> raw_;
};

uint64_t fingerprint_raw(int k, const std::vector<uint8_t>& raw);

} // namespace kempe

#endif
