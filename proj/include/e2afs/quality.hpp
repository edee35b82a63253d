#pragma once

#include "e2afs/image.hpp"

namespace e2afs {

/// 10*log10(255^2 / mse) over all 8-bit channel differences; identical
/// images give +infinity. Shapes must match.
double psnr(const GrayImage& ref, const GrayImage& test);
double psnr(const RgbImage& ref, const RgbImage& test);

/// Mean structural similarity over all 8x8 sliding windows (stride 1,
/// uniform weighting), C1 = (0.01*255)^2, C2 = (0.03*255)^2. RGB images are
/// scored per channel and averaged. Dimensions must be at least 8x8.
double ssim(const GrayImage& ref, const GrayImage& test);
double ssim(const RgbImage& ref, const RgbImage& test);

}  // namespace e2afs
