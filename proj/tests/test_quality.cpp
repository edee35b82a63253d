#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "e2afs/quality.hpp"

using namespace e2afs;

namespace {

GrayImage constant_gray(int w, int h, std::uint8_t value) {
    GrayImage img;
    img.width = w;
    img.height = h;
    img.pixels.assign(static_cast<std::size_t>(w) * h, value);
    return img;
}

}  // namespace

TEST_CASE("psnr of identical images is infinite") {
    const GrayImage img = constant_gray(16, 16, 77);
    CHECK(std::isinf(psnr(img, img)));
    CHECK(ssim(img, img) == 1.0);
}

TEST_CASE("psnr of a uniform one-level difference") {
    const GrayImage a = constant_gray(16, 16, 100);
    const GrayImage b = constant_gray(16, 16, 101);
    CHECK(psnr(a, b) == doctest::Approx(10.0 * std::log10(65025.0)).epsilon(1e-12));
    CHECK(psnr(a, b) == doctest::Approx(48.1308).epsilon(1e-4));
}

TEST_CASE("ssim of two constants matches the closed form") {
    const GrayImage a = constant_gray(16, 16, 100);
    const GrayImage b = constant_gray(16, 16, 108);
    // all windows are flat, so only the luminance term differs from 1:
    // (2*100*108 + C1) / (100^2 + 108^2 + C1) with C1 = (0.01*255)^2
    const double c1 = 2.55 * 2.55;
    const double expected = (2.0 * 100.0 * 108.0 + c1) / (100.0 * 100.0 + 108.0 * 108.0 + c1);
    CHECK(ssim(a, b) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(0.9970466).epsilon(1e-6));
}

TEST_CASE("ssim responds to structure, not just means") {
    GrayImage flat = constant_gray(16, 16, 128);
    GrayImage textured = flat;
    for (std::size_t i = 0; i < textured.pixels.size(); ++i) {
        textured.pixels[i] = static_cast<std::uint8_t>(i % 2 ? 158 : 98);
    }
    const double score = ssim(flat, textured);
    CHECK(score < 0.5);
    CHECK(score >= -1.0);
}

TEST_CASE("rgb overloads score channels jointly") {
    RgbImage a;
    a.width = 8;
    a.height = 8;
    a.pixels.assign(8 * 8 * 3, 50);
    RgbImage b = a;
    CHECK(std::isinf(psnr(a, b)));
    CHECK(ssim(a, b) == 1.0);
    b.pixels[0] = 51;
    CHECK(psnr(a, b) == doctest::Approx(10.0 * std::log10(65025.0 * 192.0)).epsilon(1e-12));
}

TEST_CASE("shape and size validation") {
    const GrayImage a = constant_gray(16, 16, 1);
    const GrayImage b = constant_gray(16, 8, 1);
    CHECK_THROWS_AS(psnr(a, b), std::invalid_argument);
    CHECK_THROWS_AS(ssim(a, b), std::invalid_argument);
    const GrayImage tiny = constant_gray(7, 7, 1);
    CHECK_THROWS_AS(ssim(tiny, tiny), std::invalid_argument);
}
