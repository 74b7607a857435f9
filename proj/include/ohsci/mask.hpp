#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ohsci/cube.hpp"
#include "ohsci/rng.hpp"

namespace ohsci {

enum class MaskKind { OneHot, RandomBinary };

// H x W x B binary modulation pattern, [h][w][m] row-major like VideoCube.
// OneHot masks activate exactly one temporal channel per pixel.
struct Mask {
    int height = 0;
    int width = 0;
    int frames = 0;
    MaskKind kind = MaskKind::RandomBinary;
    std::vector<std::uint8_t> bits;

    Mask() = default;

    Mask(int h, int w, int b, MaskKind k)
        : height(h), width(w), frames(b), kind(k) {
        if (h < 1 || w < 1 || b < 1)
            throw std::invalid_argument("Mask: dimensions must be positive");
        bits.assign(static_cast<std::size_t>(h) * w * b, 0);
    }

    std::size_t size() const { return bits.size(); }

    std::size_t offset(int h, int w, int m) const {
        return (static_cast<std::size_t>(h) * width + w) * frames + m;
    }

    std::uint8_t& at(int h, int w, int m) { return bits[offset(h, w, m)]; }
    std::uint8_t at(int h, int w, int m) const { return bits[offset(h, w, m)]; }

    bool same_dims(const VideoCube& c) const {
        return height == c.height && width == c.width && frames == c.frames;
    }
};

// One-hot pattern: per pixel draw u ~ Uniform[1, B+1), activate channel
// floor(u) (clamped to B at the measure-zero endpoint), stored 0-indexed.
// Pure function of (seed, pixel), bit-identical across platforms.
Mask gen_one_hot_mask(int height, int width, int frames, Seed seed);

// i.i.d. Bernoulli(p) bits.
Mask gen_random_binary_mask(int height, int width, int frames, double p, Seed seed);

// Bitwise 1-bits. The complement of a one-hot mask is not one-hot for B>1,
// so the result is always tagged RandomBinary.
Mask complement_mask(const Mask& m);

// True iff every pixel's temporal sum is exactly 1.
bool validate_one_hot(const Mask& m);

// OHSC1 file with values in {0.0, 1.0}; `kind` goes to a key=value sidecar
// at <path>.meta. Loading without a sidecar infers the kind by validation.
void save_mask(const Mask& m, const std::string& path);
Mask load_mask(const std::string& path);

} // namespace ohsci
