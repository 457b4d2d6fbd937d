#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace omegasum {

inline constexpr const char* kVersion = "0.1.0";

// FNV-1a, used only to stamp a config digest into output headers.
std::uint64_t fnv1a(const std::string& s);

// 17 significant digits, locale-independent.
std::string format_double(double x);

// '#'-prefixed provenance lines: version, config, config hash, optional seed.
void write_provenance(std::ostream& os, const std::string& config,
                      const std::uint64_t* seed = nullptr);

}  // namespace omegasum
