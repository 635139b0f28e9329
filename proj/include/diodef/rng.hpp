#ifndef DIODEF_RNG_HPP
#define DIODEF_RNG_HPP

#include <cstdint>
#include <random>
#include <string>

namespace diodef {

inline uint64_t fnv1a(const std::string &s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/* Independent reproducible stream per (task label, run seed).  Every
 * randomized search in the tree derives its generator this way, so results
 * are stable across runs and across parallel schedules. */
inline std::mt19937_64 task_rng(const std::string &label, uint64_t seed) {
    return std::mt19937_64(fnv1a(label + "#" + std::to_string(seed)));
}

}  // namespace diodef

#endif
