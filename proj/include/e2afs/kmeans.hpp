#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "e2afs/image.hpp"
#include "e2afs/rooter.hpp"

namespace e2afs {

struct KMeansConfig {
    int k = 20;
    std::uint64_t seed = 0;
    int max_iters = 50;
    double epsilon = 0.25;  // stop when no centroid moves this far
};

struct Palette {
    std::vector<std::array<std::uint8_t, 3>> colors;
};

struct KMeansResult {
    RgbImage quantized;
    Palette palette;
};

/// Color quantization by Lloyd's algorithm. Assignment distances are
/// sqrt(dr^2+dg^2+db^2) with the squared sum converted to FP16 and rooted
/// through the chosen rooter; ties go to the lowest centroid index. Initial
/// centroids are k distinct pixel positions drawn by a seeded splitmix64
/// shuffle; empty clusters re-seed from the pixel farthest from its
/// centroid. Fully deterministic for a given (image, config, rooter).
KMeansResult kmeans_quantize(const RgbImage& img, const KMeansConfig& cfg,
                             RooterChoice rooter);

}  // namespace e2afs
