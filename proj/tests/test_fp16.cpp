#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "e2afs/fp16.hpp"

using namespace e2afs;

TEST_CASE("decode extracts fields and class") {
    const DecodedHalf golden = decode(0x785A);
    CHECK(golden.sign == 0);
    CHECK(golden.biased_exp == 30);
    CHECK(golden.frac == 90);
    CHECK(golden.cls == FpClass::Normal);

    const DecodedHalf zero = decode(0x0000);
    CHECK(zero.sign == 0);
    CHECK(zero.biased_exp == 0);
    CHECK(zero.frac == 0);
    CHECK(zero.cls == FpClass::Zero);

    const DecodedHalf nan = decode(0x7C01);
    CHECK(nan.biased_exp == 31);
    CHECK(nan.frac == 1);
    CHECK(nan.cls == FpClass::NaN);

    CHECK(decode(0x0001).cls == FpClass::Subnormal);
    CHECK(decode(0x7C00).cls == FpClass::Infinity);
    CHECK(decode(0xFC00).sign == 1);
}

TEST_CASE("encode is the inverse of decode") {
    CHECK(encode(0, 22, 545) == 0x5A21);
    CHECK(encode(0, 15, 0) == 0x3C00);
    CHECK(encode(1, 16, 0) == 0xC000);

    CHECK_THROWS_AS(encode(2, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(encode(0, 32, 0), std::invalid_argument);
    CHECK_THROWS_AS(encode(0, 0, 1024), std::invalid_argument);
}

TEST_CASE("round-trip over every bit pattern") {
    for (unsigned w = 0; w < 65536; ++w) {
        const auto word = static_cast<HalfWord>(w);
        CHECK(encode(decode(word)) == word);
    }
}

TEST_CASE("to_real on the worked example and specials") {
    // 2^15 * (1 + 90/1024) = 32768 + 2880
    CHECK(to_real(0x785A) == 35648.0);
    CHECK(to_real(0x3C00) == 1.0);
    CHECK(to_real(0x5A21) == 196.125);
    CHECK(to_real(0x0001) == 0x1p-24);
    CHECK(to_real(0xC000) == -2.0);
    CHECK(std::isinf(to_real(0x7C00)));
    CHECK(std::isnan(to_real(0x7E00)));
}

TEST_CASE("to_real is strictly monotone over positive finite encodings") {
    for (unsigned w = 0; w < 0x7BFF; ++w) {
        CHECK(to_real(static_cast<HalfWord>(w)) < to_real(static_cast<HalfWord>(w + 1)));
    }
}

TEST_CASE("from_real_rne basics") {
    CHECK(from_real_rne(1.0) == 0x3C00);
    CHECK(from_real_rne(196.125) == 0x5A21);
    CHECK(from_real_rne(32768.0) == 0x7800);
    CHECK(from_real_rne(0.0) == 0x0000);

    // overflow saturates to infinity; 65520 is the rounding boundary
    CHECK(from_real_rne(65536.0) == kPosInf);
    CHECK(from_real_rne(65520.0) == kPosInf);
    CHECK(from_real_rne(65519.999) == 0x7BFF);
    CHECK(to_real(0x7BFF) == kMaxFinite);

    // ties to even at the significand level: 1.0 + 2^-11 splits 0x3C00/0x3C01
    CHECK(from_real_rne(1.0 + 0x1p-11) == 0x3C00);
    CHECK(from_real_rne(1.0 + 3 * 0x1p-11) == 0x3C02);

    // subnormal range and the boundary to the smallest normal
    CHECK(from_real_rne(0x1p-24) == 0x0001);
    CHECK(from_real_rne(0x1p-14) == 0x0400);
    CHECK(from_real_rne(0x1p-14 - 0x1p-25) == 0x0400);  // rounds up across the boundary

    CHECK_THROWS_AS(from_real_rne(-1.0), std::domain_error);
    CHECK_THROWS_AS(from_real_rne(std::numeric_limits<double>::infinity()),
                    std::domain_error);
}

TEST_CASE("from_real_rne(to_real(w)) round-trips every finite non-negative encoding") {
    for (unsigned w = 0; w <= 0x7BFF; ++w) {
        const auto word = static_cast<HalfWord>(w);
        CHECK(from_real_rne(to_real(word)) == word);
    }
}

TEST_CASE("exact_sqrt agrees with binary64 sqrt and rejects bad classes") {
    CHECK(exact_sqrt(0x4400) == 2.0);
    CHECK(exact_sqrt(0x3C00) == 1.0);
    CHECK(exact_sqrt(0x785A) == std::sqrt(35648.0));

    CHECK_THROWS_AS(exact_sqrt(0xC000), std::domain_error);  // negative
    CHECK_THROWS_AS(exact_sqrt(0x8000), std::domain_error);  // sign bit set
    CHECK_THROWS_AS(exact_sqrt(0x7C00), std::domain_error);  // infinity
    CHECK_THROWS_AS(exact_sqrt(0x7E00), std::domain_error);  // nan
}

TEST_CASE("exact_sqrt squares back to the input value") {
    for (unsigned w = 0; w <= 0x7BFF; ++w) {
        const double x = to_real(static_cast<HalfWord>(w));
        const double root = exact_sqrt(static_cast<HalfWord>(w));
        if (x == 0.0) {
            CHECK(root == 0.0);
        } else {
            CHECK(std::fabs(root * root - x) / x <= 0x1p-51);
        }
    }
}
