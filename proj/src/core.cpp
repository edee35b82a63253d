#include "e2afs/core.hpp"

#include <cmath>
#include <stdexcept>

namespace e2afs {

NormalizedOperand normalize(const DecodedHalf& d) {
    if (d.cls != FpClass::Normal || d.sign != 0) {
        throw std::domain_error("normalize: positive normal input required");
    }
    return {static_cast<int>(d.biased_exp) - 15, static_cast<int>(d.frac)};
}

PathSelector select_path(const NormalizedOperand& n, int breakpoint) {
    PathSelector sel;
    sel.parity = n.exponent % 2 == 0 ? Parity::Even : Parity::Odd;
    sel.region = n.frac >= breakpoint ? Region::High : Region::Low;
    return sel;
}

int halve_exponent(int r) {
    return r >> 1;  // arithmetic shift = floor division for negative r
}

int significand_approx(int frac, PathSelector sel, const ApproxConstants& c) {
    if (sel.parity == Parity::Even) {
        int s = 1024 + (frac >> 1);
        if (sel.region == Region::High) s -= c.comp_even;
        return s;
    }
    const int t = sel.region == Region::Low ? 1024 + (frac >> 2)
                                            : 1024 + ((frac + c.comp_odd) >> 2);
    return t + (t >> 1);  // x1.5 as one add plus one shift
}

HalfWord e2afs_sqrt(HalfWord w) {
    const DecodedHalf d = decode(w);
    if (d.cls == FpClass::NaN) return kQuietNan;
    if (d.sign != 0) return d.cls == FpClass::Zero ? HalfWord{0} : kQuietNan;
    if (d.cls == FpClass::Zero || d.cls == FpClass::Subnormal) return 0;
    if (d.cls == FpClass::Infinity) return kPosInf;

    const ApproxConstants constants;
    const NormalizedOperand n = normalize(d);
    const PathSelector sel = select_path(n, constants.breakpoint);
    const int sig = significand_approx(n.frac, sel, constants);
    return encode(0u, static_cast<unsigned>(halve_exponent(n.exponent) + 15),
                  static_cast<unsigned>(sig - 1024));
}

double reference_sqrt_real(double x, const ReferenceConstants& c) {
    if (!(x > 0.0) || std::isinf(x)) {
        throw std::domain_error("reference_sqrt_real: positive finite input required");
    }
    int exp2;
    std::frexp(x, &exp2);
    const int r = exp2 - 1;                          // floor(log2 x)
    const double y = std::ldexp(x, -r) - 1.0;        // in [0, 1)
    const bool high = y >= c.breakpoint;
    if (r % 2 == 0) {
        return std::ldexp(1.0 + y / 2.0 - (high ? c.comp_even : 0.0), r / 2);
    }
    const double sig = 1.5 * (1.0 + (high ? y + c.comp_odd : y) / 4.0);
    return std::ldexp(sig, (r - 1) / 2);
}

}  // namespace e2afs
