#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace flatcs {

/// Deterministic splittable generator. Every experiment draws from a single
/// root seed; independent subtasks split off named child streams so that
/// serial and parallel schedules see identical draws.
///
/// The core is SplitMix64; gaussians use Box-Muller on explicit 53-bit
/// uniforms, so byte-identical results do not depend on the standard
/// library's distribution implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed * 0x9E3779B97F4A7C15ULL + 0x1234ABCD5678EF01ULL) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform integer in [0, n).
    uint64_t uniform_index(uint64_t n) { return next_u64() % n; }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925287 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    /// Child stream keyed by a label; disjoint labels give independent streams.
    Rng split(std::string_view label) const {
        uint64_t h = 0xCBF29CE484222325ULL ^ state_;
        for (char c : label) {
            h ^= static_cast<uint64_t>(static_cast<unsigned char>(c));
            h *= 0x100000001B3ULL;
        }
        return Rng(h);
    }

    /// Child stream keyed by an index.
    Rng split(uint64_t index) const {
        uint64_t h = state_ ^ (0x9E3779B97F4A7C15ULL + index * 0xD1B54A32D192ED03ULL);
        h = (h ^ (h >> 29)) * 0xBF58476D1CE4E5B9ULL;
        return Rng(h ^ (h >> 32));
    }

private:
    uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace flatcs
