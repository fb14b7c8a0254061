/// @file util.hpp
/// @brief Shared plumbing: deterministic RNG, thread pool helper, compensated
///        summation, hashing and number formatting used by the report writers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <functional>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace metriclab {

/// splitmix64 stream. Small, fully specified, identical on every platform.
/// We avoid std::uniform_real_distribution on purpose: its output is
/// implementation defined and would break byte-identical report replay.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0,1) with 53 random bits.
    double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). Lemire reduction, n > 0.
    std::uint64_t below(std::uint64_t n) {
        return std::uint64_t((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Derive an independent stream, e.g. one per report row.
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        Rng mix(seed ^ (0x6a09e667f3bcc909ull + index * 0x9e3779b97f4a7c15ull));
        mix.next_u64();
        return mix;
    }

private:
    std::uint64_t state_;
};

/// Global worker budget (CLI --threads / METRICLAB_THREADS). 0 = hardware.
int thread_budget() noexcept;
void set_thread_budget(int n) noexcept;

/// Runs fn(i) for i in [0, count) on up to thread_budget() workers.
/// Work items must be independent; results must be written to disjoint slots
/// so the output does not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

/// Pairwise (cascade) summation; error grows like log2(n) * eps.
inline double pairwise_sum(const double* v, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

inline double pairwise_sum(std::span<const double> v) {
    return pairwise_sum(v.data(), v.size());
}

/// Neumaier-compensated accumulator for long fixed-order reductions.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

/// FNV-1a 64-bit, used to fingerprint config files in reports.
inline std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

/// Shortest-ish round-trip decimal formatting, locale independent.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
}

} // namespace metriclab
