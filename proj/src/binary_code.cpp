#include "akcodes/binary_code.hpp"

#include <algorithm>

namespace akcodes {

namespace {

// In-place Gaussian elimination to RREF with ascending pivot columns.
void rref(std::vector<BitVec>& rows, std::size_t n) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && !rows[piv].get(col)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(col)) rows[i] ^= rows[r];
        ++r;
    }
    rows.resize(r);  // zero rows sank to the bottom
}

}  // namespace

BitVec shift_word(const BitVec& w, std::size_t ell) {
    const std::size_t n = w.size();
    if (n == 0) return w;
    ell %= n;
    BitVec out(n);
    for (std::size_t j = 0; j < n; ++j)
        if (w.get((j + n - ell) % n)) out.set(j, true);
    return out;
}

BinaryCode BinaryCode::span(std::size_t length, const std::vector<BitVec>& rows) {
    BinaryCode c(length);
    for (const BitVec& r : rows)
        if (r.size() != length) throw Error("generator row length mismatch");
    c.rows_ = rows;
    rref(c.rows_, length);
    return c;
}

bool BinaryCode::contains(const BitVec& w) const {
    if (w.size() != n_) throw Error("word length mismatch in membership test");
    BitVec t = w;
    for (const BitVec& row : rows_) {
        const long p = row.lowest_set();
        if (p >= 0 && t.get(std::size_t(p))) t ^= row;
    }
    return !t.any();
}

bool BinaryCode::contains_code(const BinaryCode& sub) const {
    if (sub.n_ != n_) throw Error("code length mismatch in containment test");
    for (const BitVec& row : sub.rows_)
        if (!contains(row)) return false;
    return true;
}

BinaryCode BinaryCode::dual() const {
    // Pivot columns of the RREF determine the bound coordinates; every free
    // column yields one dual basis vector.
    std::vector<long> pivot_of_row(rows_.size());
    std::vector<bool> is_pivot(n_, false);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        pivot_of_row[i] = rows_[i].lowest_set();
        is_pivot[std::size_t(pivot_of_row[i])] = true;
    }
    std::vector<BitVec> out;
    for (std::size_t col = 0; col < n_; ++col) {
        if (is_pivot[col]) continue;
        BitVec v(n_);
        v.set(col, true);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i].get(col)) v.set(std::size_t(pivot_of_row[i]), true);
        out.push_back(std::move(v));
    }
    return span(n_, out);
}

BinaryCode BinaryCode::shifted(std::size_t ell) const {
    std::vector<BitVec> out;
    out.reserve(rows_.size());
    for (const BitVec& r : rows_) out.push_back(shift_word(r, ell));
    return span(n_, out);
}

bool BinaryCode::closed_under_shift(std::size_t ell) const {
    for (const BitVec& r : rows_)
        if (!contains(shift_word(r, ell))) return false;
    return true;
}

std::optional<unsigned> BinaryCode::min_distance(unsigned dim_cap, std::string* reason) const {
    if (rows_.empty()) {
        if (reason) *reason = "zero code has no nonzero codeword";
        return std::nullopt;
    }
    if (rows_.size() > dim_cap) {
        if (reason)
            *reason = "infeasible: dimension " + std::to_string(rows_.size()) + " exceeds cap " +
                      std::to_string(dim_cap);
        return std::nullopt;
    }
    // Gray-code walk over all 2^dim - 1 nonzero codewords: exactly one basis
    // row is toggled per step.
    const std::size_t dim = rows_.size();
    BitVec cur(n_);
    std::size_t best = n_ + 1;
    for (std::uint64_t i = 1; i < (std::uint64_t(1) << dim); ++i) {
        cur ^= rows_[std::size_t(std::countr_zero(i))];
        best = std::min(best, cur.count());
    }
    return unsigned(best);
}

std::vector<BitVec> BinaryCode::all_words() const {
    if (rows_.size() > 20) throw Error("all_words: dimension too large to enumerate");
    std::vector<BitVec> out;
    out.reserve(std::size_t(1) << rows_.size());
    BitVec cur(n_);
    out.push_back(cur);
    for (std::uint64_t i = 1; i < (std::uint64_t(1) << rows_.size()); ++i) {
        cur ^= rows_[std::size_t(std::countr_zero(i))];
        out.push_back(cur);
    }
    return out;
}

}  // namespace akcodes
