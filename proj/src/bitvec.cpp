#include "repspan/bitvec.hpp"

#include <bit>

namespace repspan {

BitVec::BitVec(int dim) : dim_(dim) {
    if (dim <= 0) {
        throw std::invalid_argument("BitVec dimension must be positive");
    }
    words_.assign((static_cast<std::size_t>(dim) + 63) / 64, 0);
}

BitVec BitVec::from_string(std::string_view s) {
    BitVec v(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') {
            v.set(static_cast<int>(i), true);
        } else if (s[i] != '0') {
            throw std::invalid_argument("BitVec string must be 0/1 only");
        }
    }
    return v;
}

BitVec BitVec::unit(int dim, int coord) {
    BitVec v(dim);
    v.set(coord, true);
    return v;
}

BitVec BitVec::random(int dim, RandomnessHandle& rnd) {
    BitVec v(dim);
    for (std::size_t w = 0; w < v.words_.size(); ++w) {
        v.words_[w] = rnd.next_word();
    }
    const int tail = dim % 64;
    if (tail != 0) {
        v.words_.back() &= (std::uint64_t{1} << tail) - 1;
    }
    return v;
}

void BitVec::check_index(int i) const {
    if (i < 0 || i >= dim_) {
        throw std::out_of_range("BitVec coordinate " + std::to_string(i) +
                                " out of range for dimension " +
                                std::to_string(dim_));
    }
}

void BitVec::check_same_dim(const BitVec& other) const {
    if (dim_ != other.dim_) {
        throw DimensionMismatch("BitVec dimension mismatch: " +
                                std::to_string(dim_) + " vs " +
                                std::to_string(other.dim_));
    }
}

bool BitVec::get(int i) const {
    check_index(i);
    return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1;
}

void BitVec::set(int i, bool value) {
    check_index(i);
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
        words_[static_cast<std::size_t>(i) / 64] |= mask;
    } else {
        words_[static_cast<std::size_t>(i) / 64] &= ~mask;
    }
}

bool BitVec::is_zero() const {
    for (std::uint64_t w : words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    check_same_dim(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

int BitVec::dot(const BitVec& other) const {
    check_same_dim(other);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        acc ^= words_[i] & other.words_[i];
    }
    return std::popcount(acc) & 1;
}

std::string BitVec::to_string() const {
    std::string s(static_cast<std::size_t>(dim_), '0');
    for (int i = 0; i < dim_; ++i) {
        if (get(i)) {
            s[static_cast<std::size_t>(i)] = '1';
        }
    }
    return s;
}

bool operator<(const BitVec& a, const BitVec& b) {
    if (a.dim_ != b.dim_) {
        return a.dim_ < b.dim_;
    }
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
        std::uint64_t x = a.words_[w];
        std::uint64_t y = b.words_[w];
        if (x != y) {
            // lowest differing bit decides; a 0 there sorts first
            const std::uint64_t diff = x ^ y;
            const std::uint64_t low = diff & (~diff + 1);
            return (x & low) == 0;
        }
    }
    return false;
}

} // namespace repspan
