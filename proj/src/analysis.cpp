#include "e2afs/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "e2afs/errors.hpp"
#include "e2afs/format.hpp"

namespace e2afs {

namespace {

constexpr int kExponentsPerParity = 15;  // even r in [-14,14], odd r in [-13,15]

// Per-parity sum of output scales: 2^(r/2) over even r equals 2^((r-1)/2)
// over odd r; both run over 2^j for j in [-7, 7].
double exponent_scale_sum() {
    double sum = 0.0;
    for (int j = -7; j <= 7; ++j) sum += std::ldexp(1.0, j);
    return sum;
}

// Signed significand residual of the even base formula: (1 + Y/2) - sqrt(1+Y).
double even_residual(double y) { return 1.0 + y / 2.0 - std::sqrt(1.0 + y); }

// Signed significand residual left for the odd compensation to cancel:
// sqrt(2)*sqrt(1+Y) - 1.5*(1 + Y/4).
double odd_residual(double y) {
    return std::sqrt(2.0) * std::sqrt(1.0 + y) - 1.5 * (1.0 + y / 4.0);
}

std::vector<double> high_cell_residuals(Parity parity) {
    std::vector<double> res(512);
    for (int y = 512; y < 1024; ++y) {
        const double yv = y / 1024.0;
        res[y - 512] = parity == Parity::Even ? even_residual(yv) : odd_residual(yv);
    }
    return res;
}

double mean_abs_shifted(const std::vector<double>& residuals, double shift) {
    double sum = 0.0;
    for (double v : residuals) sum += std::fabs(v - shift);
    return sum / static_cast<double>(residuals.size());
}

}  // namespace

std::vector<SweepRecord> sweep_domain() {
    std::vector<SweepRecord> records;
    records.reserve(30 * 1024);
    for (unsigned exp = 1; exp <= 30; ++exp) {
        for (unsigned frac = 0; frac < 1024; ++frac) {
            SweepRecord rec;
            rec.input = encode(0u, exp, frac);
            rec.exact = exact_sqrt(rec.input);
            rec.approx = to_real(e2afs_sqrt(rec.input));
            rec.abs_err = std::fabs(rec.approx - rec.exact);
            rec.rel_err = rec.abs_err / rec.exact;
            records.push_back(rec);
        }
    }
    return records;
}

ErrorMetrics compute_metrics(std::span<const SweepRecord> records) {
    if (records.empty()) {
        throw std::invalid_argument("compute_metrics: empty record set");
    }
    double sum_abs = 0.0, sum_rel = 0.0, sum_sq = 0.0;
    double max_abs = 0.0, max_exact = 0.0;
    for (const SweepRecord& rec : records) {
        sum_abs += rec.abs_err;
        sum_rel += rec.rel_err;
        sum_sq += rec.abs_err * rec.abs_err;
        max_abs = std::max(max_abs, rec.abs_err);
        max_exact = std::max(max_exact, rec.exact);
    }
    ErrorMetrics m;
    m.n = records.size();
    const auto n = static_cast<double>(m.n);
    m.med = sum_abs / n;
    m.mred = sum_rel / n;
    m.nmed = m.med / max_exact;
    m.mse = sum_sq / n;
    m.edmax = max_abs;
    return m;
}

void emit_sweep_csv(std::span<const SweepRecord> records,
                    const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("emit_sweep_csv: cannot open " + path.string());
    out << "input_hex,input_value,exact_sqrt,e2afs_sqrt,abs_err,rel_err\n";
    for (const SweepRecord& rec : records) {
        out << format_hex(rec.input) << ',' << format_real(to_real(rec.input)) << ','
            << format_real(rec.exact) << ',' << format_real(rec.approx) << ','
            << format_real(rec.abs_err) << ',' << format_real(rec.rel_err) << '\n';
    }
    out.flush();
    if (!out) throw IoError("emit_sweep_csv: write failed for " + path.string());
}

double breakpoint_med(double k) {
    if (!(k > 0.0 && k < 1.0)) {
        throw std::invalid_argument("breakpoint_med: k must lie in (0, 1)");
    }
    // Re-fit the high-region constants as mean residuals over the candidate
    // cell, so the breakpoint is the only variable under study.
    double sum_even = 0.0, sum_odd = 0.0;
    int n_high = 0;
    for (int y = 0; y < 1024; ++y) {
        const double yv = y / 1024.0;
        if (yv >= k) {
            sum_even += even_residual(yv);
            sum_odd += odd_residual(yv);
            ++n_high;
        }
    }
    ReferenceConstants c;
    c.breakpoint = k;
    c.comp_even = n_high ? sum_even / n_high : 0.0;
    c.comp_odd = n_high ? sum_odd / n_high / 0.375 : 0.0;

    double sum = 0.0;
    for (unsigned exp = 1; exp <= 30; ++exp) {
        for (unsigned frac = 0; frac < 1024; ++frac) {
            const double x = to_real(encode(0u, exp, frac));
            sum += std::fabs(reference_sqrt_real(x, c) - std::sqrt(x));
        }
    }
    return sum / (30.0 * 1024.0);
}

double compensation_cell_med(Parity parity, double c) {
    const std::vector<double> residuals = high_cell_residuals(parity);
    // The odd formula applies the constant as 1.5 * c/4 at the significand.
    const double shift = parity == Parity::Even ? c : 0.375 * c;
    return exponent_scale_sum() * mean_abs_shifted(residuals, shift) /
           kExponentsPerParity;
}

SearchResult search_breakpoint(double resolution) {
    if (!(resolution > 0.0 && resolution < 1.0)) {
        throw std::invalid_argument("search_breakpoint: resolution must lie in (0, 1)");
    }
    SearchResult best{0.0, std::numeric_limits<double>::infinity(), resolution};
    for (long i = 1;; ++i) {
        const double k = static_cast<double>(i) * resolution;
        if (k >= 1.0) break;
        const double med = breakpoint_med(k);
        if (med < best.objective) {
            best.argmin = k;
            best.objective = med;
        }
    }
    return best;
}

SearchResult search_compensation(Parity parity, double resolution) {
    if (!(resolution >= 1e-6)) {
        throw std::invalid_argument("search_compensation: resolution must be >= 1e-6");
    }
    const double hi = parity == Parity::Even ? 0.2 : 0.8;
    const std::vector<double> residuals = high_cell_residuals(parity);
    const double weight = exponent_scale_sum() / kExponentsPerParity;
    const double slope = parity == Parity::Even ? 1.0 : 0.375;
    SearchResult best{0.0, std::numeric_limits<double>::infinity(), resolution};
    for (long i = 0;; ++i) {
        const double c = static_cast<double>(i) * resolution;
        if (c > hi) break;
        const double med = weight * mean_abs_shifted(residuals, slope * c);
        if (med < best.objective) {
            best.argmin = c;
            best.objective = med;
        }
    }
    return best;
}

}  // namespace e2afs
