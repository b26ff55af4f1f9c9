#include "catwig/constants.hpp"

#include <cstdio>

namespace catwig::constants {

std::uint64_t table_hash() {
    char buf[160];
    std::snprintf(buf, sizeof buf, "hbar=%.9e k_B=%.9e G=%.9e c=%.9e", hbar, k_B, G,
                  c_light);
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a
    for (const char* p = buf; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace catwig::constants
