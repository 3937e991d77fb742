#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace stabreg {

/// Deterministic pseudorandom stream. Child streams are derived by label, so
/// every consumer of randomness gets an independent, reproducible sequence
/// from one root seed.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }
    RandomStream derive(std::string_view label) const;
    RandomStream derive(std::uint64_t index) const;

    std::uint64_t next() { return engine_(); }
    /// Uniform on [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace stabreg
