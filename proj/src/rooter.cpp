#include "e2afs/rooter.hpp"

#include <cmath>

#include "e2afs/core.hpp"

namespace e2afs {

HalfWord apply_rooter(RooterChoice choice, HalfWord w) {
    if (choice == RooterChoice::E2afs) return e2afs_sqrt(w);
    const DecodedHalf d = decode(w);
    if (d.cls == FpClass::NaN) return kQuietNan;
    if (d.sign != 0) return d.cls == FpClass::Zero ? HalfWord{0} : kQuietNan;
    if (d.cls == FpClass::Zero) return 0;
    if (d.cls == FpClass::Infinity) return kPosInf;
    return from_real_rne(std::sqrt(to_real(w)));
}

}  // namespace e2afs
