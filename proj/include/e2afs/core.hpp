#pragma once

#include "e2afs/fp16.hpp"

namespace e2afs {

// Radicand in the form 2^exponent * (1 + frac/1024).
struct NormalizedOperand {
    int exponent;  // unbiased, [-14, 15]
    int frac;      // fraction numerator over 1024, [0, 1023]
};

enum class Parity { Even, Odd };
enum class Region { Low, High };

// Which of the four approximation cells applies: exponent parity picks the
// shift-only vs x1.5 path, the fraction region picks base vs compensated.
struct PathSelector {
    Parity parity;
    Region region;
};

// Fixed-point datapath constants, numerators over 1024.
struct ApproxConstants {
    int comp_even = 46;    // 0.045 on the even high path
    int comp_odd = 341;    // 0.3333 on the odd high path
    int breakpoint = 512;  // region split at Y = 0.5
};

// Real-valued model constants, no 10-bit quantization.
struct ReferenceConstants {
    double comp_even = 0.045;
    double comp_odd = 0.3333;
    double breakpoint = 0.5;
};

/// Extracts exponent and fraction of a positive normal encoding.
/// Throws std::domain_error otherwise; callers handle specials first.
NormalizedOperand normalize(const DecodedHalf& d);

/// Parity of the unbiased exponent (mathematical modulo, so -1 is odd) and
/// fraction region. With the default breakpoint the region is just the
/// fraction MSB.
PathSelector select_path(const NormalizedOperand& n, int breakpoint = 512);

/// Floor-halves the exponent: r/2 for even r, (r-1)/2 for odd r.
int halve_exponent(int r);

/// 11-bit fixed-point output significand in [1024, 2047], value/1024 in [1,2).
/// All divisions are truncating right shifts on non-negative integers:
///   even, low:   1024 + (y >> 1)
///   even, high:  1024 + (y >> 1) - comp_even
///   odd,  low:   t = 1024 + (y >> 2);              t + (t >> 1)
///   odd,  high:  t = 1024 + ((y + comp_odd) >> 2); t + (t >> 1)
int significand_approx(int frac, PathSelector sel, const ApproxConstants& c = {});

/// The full approximate square rooter, total over the encoding space.
/// Specials: negative magnitude or NaN -> quiet NaN, +-0 -> +0,
/// +inf -> +inf, subnormal -> +0 (flush to zero).
HalfWord e2afs_sqrt(HalfWord w);

/// Real-valued model of the four-cell approximation: exact constants, no
/// quantization, exponent from floor(log2 x). Cross-checks the bit path.
double reference_sqrt_real(double x, const ReferenceConstants& c = {});

}  // namespace e2afs
