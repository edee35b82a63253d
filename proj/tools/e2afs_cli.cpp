#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "e2afs/analysis.hpp"
#include "e2afs/core.hpp"
#include "e2afs/errors.hpp"
#include "e2afs/format.hpp"
#include "e2afs/image.hpp"
#include "e2afs/kmeans.hpp"
#include "e2afs/quality.hpp"
#include "e2afs/sobel.hpp"

namespace {

// Raised for malformed subcommand combinations; maps to exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

e2afs::HalfWord parse_hex_word(const std::string& text) {
    const auto bad = [&] {
        return std::invalid_argument("expected exactly 4 hex digits, got '" + text + "'");
    };
    if (text.size() != 4) throw bad();
    unsigned value = 0;
    for (char ch : text) {
        const auto uc = static_cast<unsigned char>(ch);
        if (!std::isxdigit(uc)) throw bad();
        const unsigned digit =
            std::isdigit(uc) ? uc - '0' : static_cast<unsigned>(std::tolower(uc)) - 'a' + 10;
        value = value * 16 + digit;
    }
    return static_cast<e2afs::HalfWord>(value);
}

e2afs::RooterChoice parse_rooter(const std::string& text) {
    if (text == "exact") return e2afs::RooterChoice::Exact;
    if (text == "e2afs") return e2afs::RooterChoice::E2afs;
    throw std::invalid_argument("rooter must be 'exact' or 'e2afs', got '" + text + "'");
}

void print_kv(const char* key, const std::string& value) {
    std::cout << key << '=' << value << '\n';
}

void run_sqrt(const std::string& hex) {
    const e2afs::HalfWord w = parse_hex_word(hex);
    const e2afs::HalfWord out = e2afs::e2afs_sqrt(w);
    print_kv("input_hex", "0x" + e2afs::format_hex(w));
    print_kv("input_value", e2afs::format_real(e2afs::to_real(w)));
    print_kv("e2afs_hex", "0x" + e2afs::format_hex(out));
    print_kv("e2afs_value", e2afs::format_real(e2afs::to_real(out)));
    const e2afs::DecodedHalf d = e2afs::decode(w);
    const bool rootable = d.sign == 0 && (d.cls == e2afs::FpClass::Zero ||
                                          d.cls == e2afs::FpClass::Subnormal ||
                                          d.cls == e2afs::FpClass::Normal);
    double exact = std::numeric_limits<double>::quiet_NaN();
    double abs_err = exact, rel_err = exact;
    if (rootable) {
        exact = e2afs::exact_sqrt(w);
        abs_err = std::fabs(e2afs::to_real(out) - exact);
        rel_err = abs_err == 0.0 ? 0.0 : abs_err / exact;
    }
    print_kv("exact_value", e2afs::format_real(exact));
    print_kv("abs_err", e2afs::format_real(abs_err));
    print_kv("rel_err", e2afs::format_real(rel_err));
}

void run_sweep(const std::string& out_path) {
    const auto records = e2afs::sweep_domain();
    e2afs::emit_sweep_csv(records, out_path);
}

void run_metrics() {
    const auto records = e2afs::sweep_domain();
    const e2afs::ErrorMetrics m = e2afs::compute_metrics(records);
    std::printf("med=%.6g\n", m.med);
    std::printf("mred=%.6g\n", m.mred);
    std::printf("nmed=%.6g\n", m.nmed);
    std::printf("mse=%.6g\n", m.mse);
    std::printf("edmax=%.6g\n", m.edmax);
}

void run_sobel(const std::string& in_path, const std::string& rooter,
               const std::string& out_path, const std::string& score_path) {
    const e2afs::PnmImage loaded = e2afs::load_pnm(in_path);
    const auto* gray = std::get_if<e2afs::GrayImage>(&loaded);
    if (gray == nullptr) {
        throw std::invalid_argument("sobel: input must be a P5 grayscale image");
    }
    const e2afs::GrayImage result = e2afs::sobel_magnitude(*gray, parse_rooter(rooter));
    e2afs::save_pnm(result, out_path);
    if (!score_path.empty()) {
        const e2afs::PnmImage ref_img = e2afs::load_pnm(score_path);
        const auto* ref = std::get_if<e2afs::GrayImage>(&ref_img);
        if (ref == nullptr) {
            throw std::invalid_argument("sobel: --score-against must be a P5 grayscale image");
        }
        print_kv("psnr", e2afs::format_real(e2afs::psnr(*ref, result)));
        print_kv("ssim", e2afs::format_real(e2afs::ssim(*ref, result)));
    }
}

void run_kmeans(const std::string& in_path, int k, std::uint64_t seed,
                const std::string& rooter, const std::string& out_path) {
    const e2afs::PnmImage loaded = e2afs::load_pnm(in_path);
    const auto* rgb = std::get_if<e2afs::RgbImage>(&loaded);
    if (rgb == nullptr) {
        throw std::invalid_argument("kmeans: input must be a P6 color image");
    }
    e2afs::KMeansConfig cfg;
    cfg.k = k;
    cfg.seed = seed;
    const e2afs::KMeansResult result =
        e2afs::kmeans_quantize(*rgb, cfg, parse_rooter(rooter));
    e2afs::save_pnm(result.quantized, out_path);
    print_kv("psnr", e2afs::format_real(e2afs::psnr(*rgb, result.quantized)));
    print_kv("ssim", e2afs::format_real(e2afs::ssim(*rgb, result.quantized)));
}

void run_search(bool breakpoint, const std::string& compensation, double resolution,
                bool resolution_given) {
    if (breakpoint != compensation.empty()) {
        throw UsageError("search: pass exactly one of --breakpoint or --compensation");
    }
    e2afs::SearchResult result;
    if (breakpoint) {
        result = e2afs::search_breakpoint(resolution_given ? resolution : 1e-3);
    } else {
        e2afs::Parity parity;
        if (compensation == "even") {
            parity = e2afs::Parity::Even;
        } else if (compensation == "odd") {
            parity = e2afs::Parity::Odd;
        } else {
            throw std::invalid_argument("search: --compensation must be 'even' or 'odd'");
        }
        result = e2afs::search_compensation(parity, resolution_given ? resolution : 1e-4);
    }
    print_kv("argmin", e2afs::format_real(result.argmin));
    print_kv("objective", e2afs::format_real(result.objective));
    print_kv("resolution", e2afs::format_real(result.resolution));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"E2AFS approximate FP16 square rooter: bit-exact model, "
                 "error analysis, and application harnesses"};
    app.require_subcommand(1);

    std::string hex;
    auto* sqrt_cmd = app.add_subcommand("sqrt", "Root one FP16 encoding and report errors");
    sqrt_cmd->add_option("--hex", hex, "input encoding, 4 hex digits")->required();

    std::string sweep_out;
    auto* sweep_cmd = app.add_subcommand("sweep", "Write the exhaustive sweep CSV");
    sweep_cmd->add_option("--out", sweep_out, "output CSV path")->required();

    app.add_subcommand("metrics", "Print MED/MRED/NMED/MSE/EDmax over the sweep");

    std::string sobel_in, sobel_rooter, sobel_out, sobel_score;
    auto* sobel_cmd = app.add_subcommand("sobel", "Sobel edge detection through a rooter");
    sobel_cmd->add_option("--in", sobel_in, "input P5 image")->required();
    sobel_cmd->add_option("--rooter", sobel_rooter, "exact or e2afs")->required();
    sobel_cmd->add_option("--out", sobel_out, "output P5 image")->required();
    sobel_cmd->add_option("--score-against", sobel_score, "reference P5 image to score");

    std::string km_in, km_rooter, km_out;
    int km_k = 20;
    std::uint64_t km_seed = 1;
    auto* km_cmd = app.add_subcommand("kmeans", "K-means color quantization through a rooter");
    km_cmd->add_option("--in", km_in, "input P6 image")->required();
    km_cmd->add_option("--k", km_k, "cluster count");
    km_cmd->add_option("--seed", km_seed, "PRNG seed");
    km_cmd->add_option("--rooter", km_rooter, "exact or e2afs")->required();
    km_cmd->add_option("--out", km_out, "output P6 image")->required();

    bool search_breakpoint_flag = false;
    std::string search_comp;
    double search_res = 0.0;
    auto* search_cmd = app.add_subcommand("search", "Re-derive the breakpoint or a compensation constant");
    search_cmd->add_flag("--breakpoint", search_breakpoint_flag, "search the region breakpoint");
    search_cmd->add_option("--compensation", search_comp, "search a constant: even or odd");
    search_cmd->add_option("--resolution", search_res, "grid step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }

    try {
        if (sqrt_cmd->parsed()) {
            run_sqrt(hex);
        } else if (sweep_cmd->parsed()) {
            run_sweep(sweep_out);
        } else if (app.get_subcommand("metrics")->parsed()) {
            run_metrics();
        } else if (sobel_cmd->parsed()) {
            run_sobel(sobel_in, sobel_rooter, sobel_out, sobel_score);
        } else if (km_cmd->parsed()) {
            run_kmeans(km_in, km_k, km_seed, km_rooter, km_out);
        } else if (search_cmd->parsed()) {
            run_search(search_breakpoint_flag, search_comp, search_res,
                       search_cmd->count("--resolution") > 0);
        }
    } catch (const UsageError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const e2afs::IoError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 3;
    }
    return 0;
}
