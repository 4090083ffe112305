#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "akcodes/common.hpp"

namespace akcodes {

// Fixed-length bit vector over GF(2), packed into 64-bit words.
// Bit i of the vector is bit (i % 64) of word i / 64.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec from_string(const std::string& s) {
        BitVec v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.set(i, true);
            else if (s[i] != '0')
                throw Error("bit string may contain only '0' and '1', got '" + s + "'");
        }
        return v;
    }

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool b) {
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (b)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }

    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    BitVec& operator&=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

    bool operator==(const BitVec&) const = default;

    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += std::size_t(std::popcount(w));
        return c;
    }

    // Index of the lowest set bit, or -1 when the vector is zero.
    long lowest_set() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return long(i * 64 + std::size_t(std::countr_zero(w_[i])));
        return -1;
    }

    std::string str() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    // Strict weak order for canonical sorting of equal-length vectors.
    bool lex_less(const BitVec& o) const {
        for (std::size_t i = w_.size(); i-- > 0;)
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
        return false;
    }

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace akcodes
