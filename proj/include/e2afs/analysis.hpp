#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "e2afs/core.hpp"

namespace e2afs {

struct SweepRecord {
    HalfWord input;
    double exact;    // ground-truth square root
    double approx;   // to_real(e2afs_sqrt(input))
    double abs_err;  // |approx - exact|
    double rel_err;  // abs_err / exact
};

// The five accuracy statistics over a sweep domain.
struct ErrorMetrics {
    double med;    // mean of abs_err
    double mred;   // mean of rel_err
    double nmed;   // med / max(exact)
    double mse;    // mean of abs_err^2
    double edmax;  // max of abs_err
    std::size_t n;
};

struct SearchResult {
    double argmin;      // grid point with the lowest objective
    double objective;   // MED at argmin
    double resolution;  // grid step used
};

/// One record per positive normal encoding (sign 0, biased exponent 1..30,
/// all fractions: 30720 inputs), ascending by encoding.
std::vector<SweepRecord> sweep_domain();

/// The five statistics in double accumulation. Rejects empty input.
ErrorMetrics compute_metrics(std::span<const SweepRecord> records);

/// CSV with header input_hex,input_value,exact_sqrt,e2afs_sqrt,abs_err,rel_err
/// and one row per record. Byte-deterministic; '\n' line endings.
void emit_sweep_csv(std::span<const SweepRecord> records,
                    const std::filesystem::path& path);

/// Grid search over region breakpoints k in (0, 1), step = resolution.
/// Objective is breakpoint_med(k); ties keep the lowest k.
SearchResult search_breakpoint(double resolution);

/// Grid search over a high-region compensation constant c >= 0, step =
/// resolution (>= 1e-6). Objective is compensation_cell_med(parity, c).
SearchResult search_compensation(Parity parity, double resolution);

/// Global MED of the real-valued model over the positive-normal domain with
/// region split at k and the high-region constants re-fit as the mean
/// residual of each parity's base formula over its high cell.
double breakpoint_med(double k);

/// MED of the high-region formula of one parity with constant c substituted,
/// over the positive-normal sweep restricted to that (parity, high) cell.
double compensation_cell_med(Parity parity, double c);

}  // namespace e2afs
