#include "e2afs/quality.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace e2afs {

namespace {

constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);

double psnr_channels(const std::vector<std::uint8_t>& a,
                     const std::vector<std::uint8_t>& b) {
    std::uint64_t sq = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int d = static_cast<int>(a[i]) - static_cast<int>(b[i]);
        sq += static_cast<std::uint64_t>(d) * d;
    }
    if (sq == 0) return std::numeric_limits<double>::infinity();
    const double mse = static_cast<double>(sq) / static_cast<double>(a.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

// Summed-area table with a zero row and column; exact in uint64 for any
// 8-bit image and product of two of them.
std::vector<std::uint64_t> integral(const std::uint8_t* data, int w, int h,
                                    int stride, int offset, bool product,
                                    const std::uint8_t* other) {
    std::vector<std::uint64_t> sat(static_cast<std::size_t>(w + 1) * (h + 1), 0);
    for (int y = 0; y < h; ++y) {
        std::uint64_t row = 0;
        for (int x = 0; x < w; ++x) {
            const std::size_t i = (static_cast<std::size_t>(y) * w + x) * stride + offset;
            const std::uint64_t v = product
                                        ? static_cast<std::uint64_t>(data[i]) * other[i]
                                        : data[i];
            row += v;
            sat[static_cast<std::size_t>(y + 1) * (w + 1) + x + 1] =
                sat[static_cast<std::size_t>(y) * (w + 1) + x + 1] + row;
        }
    }
    return sat;
}

double window_sum(const std::vector<std::uint64_t>& sat, int w1, int x0, int y0,
                  int win) {
    const auto at = [&](int y, int x) {
        return sat[static_cast<std::size_t>(y) * w1 + x];
    };
    return static_cast<double>(at(y0 + win, x0 + win) - at(y0, x0 + win) -
                               at(y0 + win, x0) + at(y0, x0));
}

double ssim_channel(const std::uint8_t* a, const std::uint8_t* b, int w, int h,
                    int stride, int offset) {
    constexpr int kWin = 8;
    constexpr double kN = kWin * kWin;
    const auto sa = integral(a, w, h, stride, offset, false, nullptr);
    const auto sb = integral(b, w, h, stride, offset, false, nullptr);
    const auto saa = integral(a, w, h, stride, offset, true, a);
    const auto sbb = integral(b, w, h, stride, offset, true, b);
    const auto sab = integral(a, w, h, stride, offset, true, b);

    double total = 0.0;
    std::size_t windows = 0;
    for (int y0 = 0; y0 + kWin <= h; ++y0) {
        for (int x0 = 0; x0 + kWin <= w; ++x0) {
            const double mx = window_sum(sa, w + 1, x0, y0, kWin) / kN;
            const double my = window_sum(sb, w + 1, x0, y0, kWin) / kN;
            const double vx = window_sum(saa, w + 1, x0, y0, kWin) / kN - mx * mx;
            const double vy = window_sum(sbb, w + 1, x0, y0, kWin) / kN - my * my;
            const double cov = window_sum(sab, w + 1, x0, y0, kWin) / kN - mx * my;
            total += (2.0 * mx * my + kC1) * (2.0 * cov + kC2) /
                     ((mx * mx + my * my + kC1) * (vx + vy + kC2));
            ++windows;
        }
    }
    return total / static_cast<double>(windows);
}

void check_shape(int wa, int ha, int wb, int hb) {
    if (wa != wb || ha != hb) {
        throw std::invalid_argument("quality: image shapes differ");
    }
}

void check_ssim_size(int w, int h) {
    if (w < 8 || h < 8) {
        throw std::invalid_argument("ssim: image smaller than the 8x8 window");
    }
}

}  // namespace

double psnr(const GrayImage& ref, const GrayImage& test) {
    check_shape(ref.width, ref.height, test.width, test.height);
    return psnr_channels(ref.pixels, test.pixels);
}

double psnr(const RgbImage& ref, const RgbImage& test) {
    check_shape(ref.width, ref.height, test.width, test.height);
    return psnr_channels(ref.pixels, test.pixels);
}

double ssim(const GrayImage& ref, const GrayImage& test) {
    check_shape(ref.width, ref.height, test.width, test.height);
    check_ssim_size(ref.width, ref.height);
    return ssim_channel(ref.pixels.data(), test.pixels.data(), ref.width,
                        ref.height, 1, 0);
}

double ssim(const RgbImage& ref, const RgbImage& test) {
    check_shape(ref.width, ref.height, test.width, test.height);
    check_ssim_size(ref.width, ref.height);
    double sum = 0.0;
    for (int ch = 0; ch < 3; ++ch) {
        sum += ssim_channel(ref.pixels.data(), test.pixels.data(), ref.width,
                            ref.height, 3, ch);
    }
    return sum / 3.0;
}

}  // namespace e2afs
