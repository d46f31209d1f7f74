#pragma once

#include <stdexcept>
#include <string>

namespace groth {

// Internal invariant failure: always on, independent of NDEBUG.
[[noreturn]] inline void check_failed(const char* expr, const char* file, int line) {
    throw std::logic_error(std::string("invariant violated: ") + expr + " at " + file + ":" +
                           std::to_string(line));
}

#define GROTH_CHECK(cond) \
    do { \
        if (!(cond)) ::groth::check_failed(#cond, __FILE__, __LINE__); \
    } while (0)

// Domain error on bad caller input.
[[noreturn]] inline void domain_error(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace groth
