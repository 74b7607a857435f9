#pragma once

#include <cmath>
#include <cstdint>

namespace ohsci {

// Counter-based deterministic random numbers.
//
// Every draw is a pure function of (seed, stream, counter), so results do not
// depend on call order, thread scheduling or platform.  Streams separate
// independent purposes (mask bits, primary/compensatory sensor noise, the
// various SDE noise sources); counters enumerate elements within a stream.

struct Seed {
    std::uint64_t value = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace detail

enum class RngStream : std::uint64_t {
    mask_one_hot = 1,
    mask_bernoulli = 2,
    sensor_noise_primary = 3,
    sensor_noise_compensatory = 4,
    forward_eps = 5,
    em_path = 6,
    reverse_eps_hat = 7,
    regdif_eps_hat = 8,
    param_init = 9,
    synthetic = 10,
    train_schedule = 11,
    align_eps = 12,
};

// Streams that need a per-step / per-path substream fold the index in here.
inline std::uint64_t substream(RngStream s, std::uint64_t sub) {
    return static_cast<std::uint64_t>(s) + (sub << 20);
}

inline std::uint64_t mix_u64(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    std::uint64_t h = detail::splitmix64(seed);
    h = detail::splitmix64(h ^ stream);
    h = detail::splitmix64(h ^ counter);
    return h;
}

// Uniform in [0,1), 53-bit resolution.
inline double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return static_cast<double>(mix_u64(seed, stream, counter) >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller; the pair of uniforms comes from two
// decorrelated sub-draws of the same (stream, counter) slot.
inline double normal01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    const std::uint64_t h1 = mix_u64(seed, stream, counter);
    const std::uint64_t h2 = mix_u64(seed, stream ^ 0xD1B54A32D192ED03ULL, counter);
    const double u1 = (static_cast<double>(h1 >> 11) + 1.0) * 0x1.0p-53; // (0,1]
    const double u2 = static_cast<double>(h2 >> 11) * 0x1.0p-53;         // [0,1)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

// Derive a child seed, e.g. per-sample seeds inside a training epoch.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return mix_u64(seed, 0xC2B2AE3D27D4EB4FULL ^ a, b);
}

} // namespace ohsci
