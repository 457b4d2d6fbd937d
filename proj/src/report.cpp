#include "omegasum/report.hpp"

#include <cstdio>

namespace omegasum {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_provenance(std::ostream& os, const std::string& config,
                      const std::uint64_t* seed) {
    os << "# omegasum " << kVersion << "\n";
    os << "# config " << config << "\n";
    char hex[32];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(fnv1a(config)));
    os << "# config_hash " << hex << "\n";
    if (seed) os << "# seed " << *seed << "\n";
}

}  // namespace omegasum
