#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "repspan/rng.hpp"

namespace repspan {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Vector over GF(2) of fixed dimension, packed into 64-bit words.
/// Addition is coordinatewise XOR; the inner product is the parity of the
/// coordinatewise AND. Unused tail bits of the last word are kept zero so
/// word-wise equality and hashing are exact.
class BitVec {
public:
    explicit BitVec(int dim);

    /// Parse "0101..." (coordinate 0 first).
    static BitVec from_string(std::string_view s);
    static BitVec unit(int dim, int coord);
    /// Uniform over GF(2)^dim; consumes exactly ceil(dim/64) words.
    static BitVec random(int dim, RandomnessHandle& rnd);

    int dim() const { return dim_; }
    bool get(int i) const;
    void set(int i, bool value);
    bool is_zero() const;

    BitVec& operator^=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    /// <u,v> mod 2.
    int dot(const BitVec& other) const;

    std::string to_string() const;

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.dim_ == b.dim_ && a.words_ == b.words_;
    }
    friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }
    /// Lexicographic on coordinates 0..d-1 (the encoding order used for
    /// canonical sorting).
    friend bool operator<(const BitVec& a, const BitVec& b);

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void check_index(int i) const;
    void check_same_dim(const BitVec& other) const;

    int dim_;
    std::vector<std::uint64_t> words_;
};

} // namespace repspan
