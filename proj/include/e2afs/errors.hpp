#pragma once

#include <stdexcept>

namespace e2afs {

// File access or file format failure; the message names the offending path.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace e2afs
