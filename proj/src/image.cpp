#include "e2afs/image.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <string>

namespace e2afs {

namespace {

long read_header_int(std::istream& in, const std::filesystem::path& path) {
    for (;;) {
        const int ch = in.peek();
        if (ch == '#') {
            std::string comment;
            std::getline(in, comment);
        } else if (ch != EOF && std::isspace(ch)) {
            in.get();
        } else {
            break;
        }
    }
    long value = 0;
    if (!(in >> value)) {
        throw IoError("load_pnm: malformed header in " + path.string());
    }
    return value;
}

void check_dims(int width, int height, std::size_t pixel_bytes,
                std::size_t expected_channels) {
    if (width <= 0 || height <= 0 ||
        pixel_bytes != static_cast<std::size_t>(width) * height * expected_channels) {
        throw std::invalid_argument("save_pnm: image dimensions do not match pixel data");
    }
}

void write_body(std::ofstream& out, const std::vector<std::uint8_t>& pixels,
                const std::filesystem::path& path) {
    out.write(reinterpret_cast<const char*>(pixels.data()),
              static_cast<std::streamsize>(pixels.size()));
    out.flush();
    if (!out) throw IoError("save_pnm: write failed for " + path.string());
}

}  // namespace

PnmImage load_pnm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("load_pnm: cannot open " + path.string());

    std::string magic;
    in >> magic;
    if (magic != "P5" && magic != "P6") {
        throw IoError("load_pnm: unsupported magic '" + magic + "' in " + path.string());
    }
    const long width = read_header_int(in, path);
    const long height = read_header_int(in, path);
    const long maxval = read_header_int(in, path);
    if (width <= 0 || height <= 0) {
        throw IoError("load_pnm: bad dimensions in " + path.string());
    }
    if (maxval != 255) {
        throw IoError("load_pnm: unsupported maxval " + std::to_string(maxval) +
                      " in " + path.string());
    }
    in.get();  // the single whitespace byte before the binary body

    const std::size_t channels = magic == "P6" ? 3 : 1;
    const std::size_t count = static_cast<std::size_t>(width) * height * channels;
    std::vector<std::uint8_t> data(count);
    in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count) {
        throw IoError("load_pnm: truncated body in " + path.string());
    }

    if (channels == 1) {
        return GrayImage{static_cast<int>(width), static_cast<int>(height), std::move(data)};
    }
    return RgbImage{static_cast<int>(width), static_cast<int>(height), std::move(data)};
}

void save_pnm(const GrayImage& img, const std::filesystem::path& path) {
    check_dims(img.width, img.height, img.pixels.size(), 1);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("save_pnm: cannot open " + path.string());
    out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
    write_body(out, img.pixels, path);
}

void save_pnm(const RgbImage& img, const std::filesystem::path& path) {
    check_dims(img.width, img.height, img.pixels.size(), 3);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("save_pnm: cannot open " + path.string());
    out << "P6\n" << img.width << ' ' << img.height << "\n255\n";
    write_body(out, img.pixels, path);
}

}  // namespace e2afs
