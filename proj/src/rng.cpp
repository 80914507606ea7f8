#include "repspan/rng.hpp"

namespace repspan {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

constexpr std::uint64_t kLane[4] = {
    0x9e3779b97f4a7c15ULL, 0xd1b54a32d192ed03ULL,
    0x8cb92ba72f3d8dd7ULL, 0xeb44accab455d165ULL};

} // namespace

RandomnessHandle RandomnessHandle::from_seed(std::uint64_t seed) {
    Seed key;
    for (int i = 0; i < 4; ++i) {
        key[i] = mix64(seed + kLane[i]);
    }
    return RandomnessHandle(key);
}

RandomnessHandle RandomnessHandle::sub(std::string_view label) const {
    const std::uint64_t h = fnv1a(label);
    Seed child;
    for (int i = 0; i < 4; ++i) {
        child[i] = mix64(key_[i] + mix64(h ^ kLane[i]));
    }
    return RandomnessHandle(child);
}

std::uint64_t RandomnessHandle::next_word() {
    std::uint64_t z = mix64(counter_++ + key_[0]);
    z = mix64(z ^ key_[1]);
    z = mix64(z + key_[2]);
    return z ^ key_[3];
}

double RandomnessHandle::uniform_real(double lo, double hi) {
    const double u = static_cast<double>(next_word() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

int RandomnessHandle::fair_bit() {
    return static_cast<int>(next_word() >> 63);
}

std::uint64_t RandomnessHandle::uniform_index(std::uint64_t n) {
    // multiply-shift map of one word; bias is < 2^-64 per draw
    const unsigned __int128 prod =
        static_cast<unsigned __int128>(next_word()) * n;
    return static_cast<std::uint64_t>(prod >> 64);
}

} // namespace repspan
