#ifndef PHRASEKIT_RNG_HPP
#define PHRASEKIT_RNG_HPP

#include <cstdint>
#include <string_view>

namespace phrasekit {

// splitmix64: tiny, platform-stable generator. All sampling in the pipeline
// runs through this so outputs are bytewise reproducible everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Modulo bias is irrelevant at the n used here.
    std::uint64_t bounded(std::uint64_t n) { return n ? next() % n : 0; }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Named substream derivation: fnv1a-64 of the purpose string folded into the
// base seed, finalized through one splitmix step. Substreams for distinct
// purposes ("ec/<phrase_id>", "fn-audit", ...) are independent of each other.
std::uint64_t derive_seed(std::uint64_t base, std::string_view purpose);

}  // namespace phrasekit

#endif
