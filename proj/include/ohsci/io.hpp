#pragma once

#include <string>
#include <vector>

#include "ohsci/cube.hpp"

namespace ohsci {

// OHSC1 container, used for cubes, masks and measurements (B=1):
//   bytes 0..4   magic "OHSC1"
//   byte  5      version (1)
//   bytes 6..7   reserved, zero
//   bytes 8..19  H, W, B as 32-bit little-endian unsigned integers
//   bytes 20..23 padding, zero          (header total: 24 bytes)
//   payload      H*W*B IEEE-754 float32 little-endian, [h][w][m] row-major
//
// Values are stored in 32 bits; in-memory precision is 64-bit.

void save_cube(const VideoCube& cube, const std::string& path);
VideoCube load_cube(const std::string& path);

void save_measurement(const Measurement& y, const std::string& path);
Measurement load_measurement(const std::string& path);

// One 8-bit binary PGM per frame, named frame_000.pgm ... frame_{B-1}.pgm.
// Values are clamped to [0,1] and scaled to [0,255] with round-half-up.
void export_frames(const VideoCube& cube, const std::string& dir);

// Scalar version of the export quantization, exposed for tests.
inline int to_pgm_byte(double v) {
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    int q = static_cast<int>(v * 255.0 + 0.5); // round half up
    return q > 255 ? 255 : q;
}

// Read a single binary (P5, maxval <= 255) PGM frame.
Measurement load_pgm(const std::string& path);

// Directory of PGM frames -> cubes of `frames_per_cube` consecutive frames
// (sorted by filename, non-overlapping windows, remainder dropped).
std::vector<VideoCube> import_frame_dir(const std::string& dir, int frames_per_cube);

// key=value sidecar metadata, one pair per line.
void write_metadata(const std::string& path, const std::vector<std::pair<std::string, std::string>>& kv);
std::vector<std::pair<std::string, std::string>> read_metadata(const std::string& path);

} // namespace ohsci
