#include "rng.hpp"

namespace phrasekit {

std::uint64_t derive_seed(std::uint64_t base, std::string_view purpose) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : purpose) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    SplitMix64 mixer(base ^ h);
    return mixer.next();
}

}  // namespace phrasekit
