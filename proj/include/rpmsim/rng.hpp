#pragma once

#include <cstdint>
#include <random>

namespace rpmsim {

// Deterministic random stream addressed by (seed, stream_id).
//
// Identical pairs produce bit-identical variate sequences; distinct stream_ids
// from one seed give statistically independent streams. Stream separation runs
// the pair through splitmix64 to decorrelate related ids before seeding the
// mt19937_64 state.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id) {
        std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1));
        std::seed_seq seq{split(s), split(s), split(s), split(s),
                          split(s), split(s), split(s), split(s)};
        gen_.seed(seq);
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1p-53; }

    // Uniform on the open interval (0, 1); safe to pass to log().
    double uniform_open() {
        return (static_cast<double>(gen_() >> 12) + 0.5) * 0x1p-52;
    }

private:
    static std::uint32_t split(std::uint64_t& state) {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<std::uint32_t>((z ^ (z >> 31)) >> 32);
    }

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 gen_;
};

}  // namespace rpmsim
