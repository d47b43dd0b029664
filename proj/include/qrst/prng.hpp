#pragma once

#include <cstdint>
#include <vector>

#include "qrst/rational.hpp"

namespace qrst {

/// Deterministic 64-bit generator (splitmix64). The algorithm is fixed here so
/// that seeded runs are reproducible across platforms and standard libraries;
/// its name is recorded in run metadata.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform rational K / 2^64 with K the next raw output. Comparisons
    /// against exact probabilities stay exact.
    Rat uniform() {
        std::uint64_t k = next();
        Rat num(0);
        mpz_import(num.get_num().get_mpz_t(), 1, 1, sizeof(k), 0, 0, &k);
        Rat den(0);
        mpz_ui_pow_ui(den.get_num().get_mpz_t(), 2, 64);
        Rat r = num / den;
        r.canonicalize();
        return r;
    }

    /// Draws an index from cumulative comparison of exact weights. The weights
    /// need not sum to exactly 1 (the last entry absorbs the remainder).
    std::size_t draw(const std::vector<Rat>& weights) {
        Rat u = uniform();
        Rat acc(0);
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return i;
        }
        return weights.empty() ? 0 : weights.size() - 1;
    }

    static constexpr const char* name() { return "splitmix64"; }

private:
    std::uint64_t state_;
};

} // namespace qrst
