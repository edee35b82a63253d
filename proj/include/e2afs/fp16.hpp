#pragma once

#include <cstdint>

namespace e2afs {

// IEEE-754 binary16: bit 15 = sign, bits 14..10 = biased exponent (bias 15),
// bits 9..0 = fraction. Every 16-bit pattern is a legal encoding.
using HalfWord = std::uint16_t;

enum class FpClass { Zero, Subnormal, Normal, Infinity, NaN };

struct DecodedHalf {
    unsigned sign;        // 0 or 1
    unsigned biased_exp;  // [0, 31]
    unsigned frac;        // [0, 1023]
    FpClass cls;
};

inline constexpr HalfWord kQuietNan = 0x7E00;  // canonical quiet NaN
inline constexpr HalfWord kPosInf = 0x7C00;
inline constexpr double kMaxFinite = 65504.0;  // (2 - 2^-10) * 2^15

/// Splits an encoding into its fields and classifies it. Total function.
DecodedHalf decode(HalfWord w);

/// Inverse of decode. Throws std::invalid_argument on out-of-range fields.
HalfWord encode(unsigned sign, unsigned biased_exp, unsigned frac);
HalfWord encode(const DecodedHalf& d);

/// Exact real value of an encoding. Infinity and NaN come back as the
/// corresponding non-finite doubles.
double to_real(HalfWord w);

/// Nearest half-precision encoding of a finite non-negative real, ties to
/// even; values at or above 65520 saturate to +infinity.
HalfWord from_real_rne(double x);

/// Ground-truth square root in binary64: sqrt(to_real(w)) correctly rounded.
/// Rejects sign=1, infinity, and NaN inputs with std::domain_error.
double exact_sqrt(HalfWord w);

}  // namespace e2afs
