#include "e2afs/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "e2afs/core.hpp"

namespace e2afs {

namespace {

// Fixed PRNG so palettes are identical across platforms and standard
// library versions.
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct Centroid {
    double r, g, b;
};

double plain_sq_dist(const std::uint8_t* px, const Centroid& c) {
    const double dr = px[0] - c.r;
    const double dg = px[1] - c.g;
    const double db = px[2] - c.b;
    return dr * dr + dg * dg + db * db;
}

}  // namespace

KMeansResult kmeans_quantize(const RgbImage& img, const KMeansConfig& cfg,
                             RooterChoice rooter) {
    const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
    if (img.width <= 0 || img.height <= 0 || img.pixels.size() != n * 3) {
        throw std::invalid_argument("kmeans_quantize: malformed image");
    }
    if (cfg.k < 1 || static_cast<std::size_t>(cfg.k) > n) {
        throw std::invalid_argument("kmeans_quantize: k must lie in [1, pixel count]");
    }
    if (cfg.max_iters < 1 || !(cfg.epsilon >= 0.0)) {
        throw std::invalid_argument("kmeans_quantize: bad stopping parameters");
    }
    const int k = cfg.k;

    // Rooted distance per FP16 encoding; one table lookup per candidate.
    std::vector<double> rooted(65536);
    for (std::uint32_t w = 0; w < 65536; ++w) {
        rooted[w] = to_real(apply_rooter(rooter, static_cast<HalfWord>(w)));
    }
    const auto distance = [&](const std::uint8_t* px, const Centroid& c) {
        return rooted[from_real_rne(plain_sq_dist(px, c))];
    };

    // Seed centroids from k distinct pixel positions (partial Fisher-Yates).
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::uint64_t state = cfg.seed;
    std::vector<Centroid> centroids(k);
    for (int j = 0; j < k; ++j) {
        const std::size_t pick = j + splitmix64(state) % (n - j);
        std::swap(order[j], order[pick]);
        const std::uint8_t* px = &img.pixels[static_cast<std::size_t>(order[j]) * 3];
        centroids[j] = {static_cast<double>(px[0]), static_cast<double>(px[1]),
                        static_cast<double>(px[2])};
    }

    std::vector<int> assign(n, -1);
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        std::size_t changes = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint8_t* px = &img.pixels[i * 3];
            int best = 0;
            double best_d = distance(px, centroids[0]);
            for (int j = 1; j < k; ++j) {
                const double d = distance(px, centroids[j]);
                if (d < best_d) {  // strict: ties keep the lowest index
                    best_d = d;
                    best = j;
                }
            }
            if (assign[i] != best) {
                assign[i] = best;
                ++changes;
            }
        }
        if (changes == 0) break;

        // Channel sums are integers, so the means are order-independent.
        std::vector<std::array<std::uint64_t, 3>> sums(k, {0, 0, 0});
        std::vector<std::uint64_t> counts(k, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint8_t* px = &img.pixels[i * 3];
            auto& s = sums[assign[i]];
            s[0] += px[0];
            s[1] += px[1];
            s[2] += px[2];
            ++counts[assign[i]];
        }
        double movement = 0.0;
        for (int j = 0; j < k; ++j) {
            if (counts[j] == 0) continue;
            const Centroid next{static_cast<double>(sums[j][0]) / counts[j],
                                static_cast<double>(sums[j][1]) / counts[j],
                                static_cast<double>(sums[j][2]) / counts[j]};
            const double dr = next.r - centroids[j].r;
            const double dg = next.g - centroids[j].g;
            const double db = next.b - centroids[j].b;
            movement = std::max(movement, std::sqrt(dr * dr + dg * dg + db * db));
            centroids[j] = next;
        }
        // Re-seed empty clusters from the farthest pixel, one per cluster in
        // index order; plain squared distance, ties to the lowest pixel index.
        std::vector<char> taken(n, 0);
        for (int j = 0; j < k; ++j) {
            if (counts[j] != 0) continue;
            std::size_t far_i = 0;
            double far_d = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (taken[i]) continue;
                const double d = plain_sq_dist(&img.pixels[i * 3], centroids[assign[i]]);
                if (d > far_d) {
                    far_d = d;
                    far_i = i;
                }
            }
            taken[far_i] = 1;
            const std::uint8_t* px = &img.pixels[far_i * 3];
            centroids[j] = {static_cast<double>(px[0]), static_cast<double>(px[1]),
                            static_cast<double>(px[2])};
            movement = std::numeric_limits<double>::infinity();
        }
        if (movement < cfg.epsilon) break;
    }

    KMeansResult result;
    result.quantized.width = img.width;
    result.quantized.height = img.height;
    result.quantized.pixels.resize(n * 3);
    std::vector<std::array<std::uint8_t, 3>> rounded(k);
    std::vector<char> used(k, 0);
    for (int j = 0; j < k; ++j) {
        const auto q = [](double v) {
            return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
        };
        rounded[j] = {q(centroids[j].r), q(centroids[j].g), q(centroids[j].b)};
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = rounded[assign[i]];
        result.quantized.pixels[i * 3] = c[0];
        result.quantized.pixels[i * 3 + 1] = c[1];
        result.quantized.pixels[i * 3 + 2] = c[2];
        used[assign[i]] = 1;
    }
    for (int j = 0; j < k; ++j) {
        if (used[j]) result.palette.colors.push_back(rounded[j]);
    }
    return result;
}

}  // namespace e2afs
