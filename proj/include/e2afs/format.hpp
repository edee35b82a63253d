#pragma once

#include <string>

#include "e2afs/fp16.hpp"

namespace e2afs {

// Shortest decimal form with up to 12 significant digits; integral values
// keep a trailing ".0" so every field reads as a real number.
std::string format_real(double x);

// Four uppercase hex digits, no prefix.
std::string format_hex(HalfWord w);

}  // namespace e2afs
