#pragma once

#include <optional>
#include <vector>

#include "akcodes/bitvec.hpp"

namespace akcodes {

// A binary linear code, stored as the reduced row echelon form of a generator
// matrix (pivot columns ascending, each pivot the only 1 in its column).
// Two BinaryCode values are equal iff they are the same subspace.
class BinaryCode {
  public:
    BinaryCode() = default;

    // The zero code of the given length.
    explicit BinaryCode(std::size_t length) : n_(length) {}

    // Span of arbitrary generator rows; rows are reduced to RREF.
    static BinaryCode span(std::size_t length, const std::vector<BitVec>& rows);

    std::size_t length() const { return n_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<BitVec>& basis() const { return rows_; }

    bool contains(const BitVec& w) const;
    bool contains_code(const BinaryCode& sub) const;
    bool operator==(const BinaryCode&) const = default;

    // Euclidean dual (nullspace of the generator matrix), dim n - dim(C).
    BinaryCode dual() const;

    // Image under the cyclic right shift T applied ell times
    // (T(x1,...,xn) = (xn,x1,...,x_{n-1})).
    BinaryCode shifted(std::size_t ell) const;

    // Closure under T^ell: T^ell(C) contained in C.
    bool closed_under_shift(std::size_t ell) const;

    // Minimum Hamming distance by codeword enumeration. Fails (nullopt, with
    // reason) on the zero code and when dim exceeds the cap; never truncates.
    std::optional<unsigned> min_distance(unsigned dim_cap, std::string* reason = nullptr) const;

    // Every codeword, for oracle use only; requires dim <= 20.
    std::vector<BitVec> all_words() const;

  private:
    std::size_t n_ = 0;
    std::vector<BitVec> rows_;
};

// Right cyclic shift of a single word, ell steps.
BitVec shift_word(const BitVec& w, std::size_t ell);

}  // namespace akcodes
