#pragma once

#include <stdexcept>
#include <string>

namespace omegasum {

// Exact-arithmetic path could not certify its result (caller may fall back
// to a direct method).
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Least-squares fit rejected (e.g. design matrix too ill-conditioned).
class fit_error : public std::runtime_error {
public:
    explicit fit_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace omegasum
