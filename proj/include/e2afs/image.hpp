#pragma once

#include <cstdint>
#include <filesystem>
#include <variant>
#include <vector>

#include "e2afs/errors.hpp"

namespace e2afs {

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major, width*height
};

struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major, 3 bytes per pixel
};

using PnmImage = std::variant<GrayImage, RgbImage>;

/// Binary P5 (gray) or P6 (rgb), maxval 255. '#' comments tolerated in the
/// header. Malformed or truncated files raise IoError naming the path.
PnmImage load_pnm(const std::filesystem::path& path);

/// Single whitespace-delimited header, no comments, '\n' separators.
void save_pnm(const GrayImage& img, const std::filesystem::path& path);
void save_pnm(const RgbImage& img, const std::filesystem::path& path);

}  // namespace e2afs
