#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace repspan {

/// Counter-based random stream with hierarchical labeled substreams.
///
/// A handle is identified by a 256-bit key. Deriving a substream mixes a
/// label into the key and resets the counter, so the stream produced by a
/// given (seed, label path) is the same on every platform and does not
/// depend on how many words the parent has consumed. Every draw consumes
/// exactly one 64-bit word per primitive call, so two code paths that make
/// the same sequence of calls stay in lockstep.
class RandomnessHandle {
public:
    using Seed = std::array<std::uint64_t, 4>;

    explicit RandomnessHandle(const Seed& seed) : key_(seed) {}

    /// Expand a single word into a full 256-bit key.
    static RandomnessHandle from_seed(std::uint64_t seed);

    /// Child stream for a named subcomputation; independent of this
    /// handle's counter position.
    RandomnessHandle sub(std::string_view label) const;

    std::uint64_t next_word();

    /// Uniform in [lo, hi). One word.
    double uniform_real(double lo, double hi);

    /// One fair coin flip. One word.
    int fair_bit();

    /// Uniform in {0, ..., n-1}, n >= 1. One word.
    std::uint64_t uniform_index(std::uint64_t n);

    const Seed& key() const { return key_; }
    std::uint64_t counter() const { return counter_; }

private:
    Seed key_;
    std::uint64_t counter_ = 0;
};

} // namespace repspan
