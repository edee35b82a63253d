#pragma once

#include "e2afs/image.hpp"
#include "e2afs/rooter.hpp"

namespace e2afs {

/// Gradient magnitude G = sqrt(Gx^2 + Gy^2) with the standard 3x3 Sobel
/// kernels in exact integer arithmetic. The squared sum is clamped to the
/// largest finite FP16 value, converted to FP16, and rooted through the
/// chosen rooter; output pixels are clamp(round(G), 0, 255), borders 0.
/// Requires width and height >= 3.
GrayImage sobel_magnitude(const GrayImage& img, RooterChoice rooter);

}  // namespace e2afs
