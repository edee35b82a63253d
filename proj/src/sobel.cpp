#include "e2afs/sobel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace e2afs {

GrayImage sobel_magnitude(const GrayImage& img, RooterChoice rooter) {
    if (img.width < 3 || img.height < 3) {
        throw std::invalid_argument("sobel_magnitude: image must be at least 3x3");
    }
    GrayImage out;
    out.width = img.width;
    out.height = img.height;
    out.pixels.assign(static_cast<std::size_t>(img.width) * img.height, 0);

    const auto px = [&](int x, int y) -> int {
        return img.pixels[static_cast<std::size_t>(y) * img.width + x];
    };
    for (int y = 1; y + 1 < img.height; ++y) {
        for (int x = 1; x + 1 < img.width; ++x) {
            const int gx = px(x + 1, y - 1) + 2 * px(x + 1, y) + px(x + 1, y + 1) -
                           px(x - 1, y - 1) - 2 * px(x - 1, y) - px(x - 1, y + 1);
            const int gy = px(x - 1, y + 1) + 2 * px(x, y + 1) + px(x + 1, y + 1) -
                           px(x - 1, y - 1) - 2 * px(x, y - 1) - px(x + 1, y - 1);
            const double sq = static_cast<double>(gx) * gx + static_cast<double>(gy) * gy;
            const HalfWord s = from_real_rne(std::min(sq, kMaxFinite));
            const double g = to_real(apply_rooter(rooter, s));
            const long v = std::lround(g);
            out.pixels[static_cast<std::size_t>(y) * img.width + x] =
                static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
        }
    }
    return out;
}

}  // namespace e2afs
