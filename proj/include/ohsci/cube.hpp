#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ohsci/errors.hpp"

namespace ohsci {

// H x W x B grayscale video, row-major [h][w][m] with the temporal index
// innermost so per-pixel temporal operations touch contiguous memory.
// Values are nominally in [0,1] for ground-truth video; intermediate SDE
// states may leave that range and are clamped only at image export and
// metric time.
struct VideoCube {
    int height = 0;
    int width = 0;
    int frames = 0;
    std::vector<double> data;

    VideoCube() = default;

    VideoCube(int h, int w, int b, double fill = 0.0)
        : height(h), width(w), frames(b) {
        if (h < 1 || w < 1 || b < 1)
            throw std::invalid_argument("VideoCube: dimensions must be positive");
        data.assign(static_cast<std::size_t>(h) * w * b, fill);
    }

    std::size_t size() const { return data.size(); }

    std::size_t offset(int h, int w, int m) const {
        return (static_cast<std::size_t>(h) * width + w) * frames + m;
    }

    double& at(int h, int w, int m) { return data[offset(h, w, m)]; }
    double at(int h, int w, int m) const { return data[offset(h, w, m)]; }

    bool same_dims(const VideoCube& o) const {
        return height == o.height && width == o.width && frames == o.frames;
    }
};

// Single 2D compressed snapshot, row-major [h][w].
struct Measurement {
    int height = 0;
    int width = 0;
    std::vector<double> data;

    Measurement() = default;

    Measurement(int h, int w, double fill = 0.0) : height(h), width(w) {
        if (h < 1 || w < 1)
            throw std::invalid_argument("Measurement: dimensions must be positive");
        data.assign(static_cast<std::size_t>(h) * w, fill);
    }

    std::size_t size() const { return data.size(); }

    std::size_t offset(int h, int w) const {
        return static_cast<std::size_t>(h) * width + w;
    }

    double& at(int h, int w) { return data[offset(h, w)]; }
    double at(int h, int w) const { return data[offset(h, w)]; }

    bool same_dims(const Measurement& o) const {
        return height == o.height && width == o.width;
    }
};

// Zero-mean Gaussian measurement noise with standard deviation `std`.
struct NoiseModel {
    double std = 0.0;

    NoiseModel() = default;
    explicit NoiseModel(double s) : std(s) {
        if (s < 0.0) throw std::invalid_argument("NoiseModel: std must be >= 0");
    }
};

} // namespace ohsci
