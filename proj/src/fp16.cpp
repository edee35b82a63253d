#include "e2afs/fp16.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace e2afs {

DecodedHalf decode(HalfWord w) {
    DecodedHalf d;
    d.sign = (w >> 15) & 0x1u;
    d.biased_exp = (w >> 10) & 0x1Fu;
    d.frac = w & 0x3FFu;
    if (d.biased_exp == 0) {
        d.cls = d.frac == 0 ? FpClass::Zero : FpClass::Subnormal;
    } else if (d.biased_exp == 31) {
        d.cls = d.frac == 0 ? FpClass::Infinity : FpClass::NaN;
    } else {
        d.cls = FpClass::Normal;
    }
    return d;
}

HalfWord encode(unsigned sign, unsigned biased_exp, unsigned frac) {
    if (sign > 1 || biased_exp > 31 || frac > 1023) {
        throw std::invalid_argument("encode: field out of range");
    }
    return static_cast<HalfWord>((sign << 15) | (biased_exp << 10) | frac);
}

HalfWord encode(const DecodedHalf& d) { return encode(d.sign, d.biased_exp, d.frac); }

double to_real(HalfWord w) {
    const DecodedHalf d = decode(w);
    const double sign = d.sign ? -1.0 : 1.0;
    switch (d.cls) {
        case FpClass::Zero:
            return sign * 0.0;
        case FpClass::Subnormal:
            // 2^-14 * frac/1024
            return sign * std::ldexp(static_cast<double>(d.frac), -24);
        case FpClass::Normal:
            // 2^(biased_exp-15) * (1024 + frac)/1024
            return sign * std::ldexp(static_cast<double>(1024 + d.frac),
                                     static_cast<int>(d.biased_exp) - 25);
        case FpClass::Infinity:
            return sign * std::numeric_limits<double>::infinity();
        case FpClass::NaN:
            return std::numeric_limits<double>::quiet_NaN();
    }
    return 0.0;  // unreachable
}

HalfWord from_real_rne(double x) {
    if (!(x >= 0.0) || std::isinf(x)) {
        throw std::domain_error("from_real_rne: finite non-negative input required");
    }
    if (x == 0.0) return 0;
    // 65520 is the midpoint between 65504 and the next representable step;
    // round-to-nearest-even sends the midpoint up, into infinity.
    if (x >= 65520.0) return kPosInf;
    if (x < 0x1p-14) {
        // subnormal target, ulp = 2^-24; llrint is ties-to-even under the
        // default rounding mode, which this library never changes
        const auto frac = static_cast<unsigned>(std::llrint(std::ldexp(x, 24)));
        return frac >= 1024 ? encode(0u, 1u, 0u) : static_cast<HalfWord>(frac);
    }
    int exp2;
    std::frexp(x, &exp2);       // x = m * 2^exp2 with m in [0.5, 1)
    int e = exp2 - 1;           // floor(log2 x), in [-14, 15] here
    const double sig = std::ldexp(x, -e);  // in [1, 2), exactly scaled
    auto frac = static_cast<unsigned>(std::llrint(std::ldexp(sig - 1.0, 10)));
    if (frac == 1024) {  // rounded up past the significand range
        ++e;
        frac = 0;
    }
    return encode(0u, static_cast<unsigned>(e + 15), frac);
}

double exact_sqrt(HalfWord w) {
    const DecodedHalf d = decode(w);
    if (d.sign != 0 || d.cls == FpClass::Infinity || d.cls == FpClass::NaN) {
        throw std::domain_error("exact_sqrt: non-negative finite encoding required");
    }
    return std::sqrt(to_real(w));
}

}  // namespace e2afs
