#include "akcodes/gray.hpp"

#include <bit>
#include <string>

namespace akcodes {

namespace {

// phi on the coefficient block [lo, lo + len): len = 2^j, the map
// (alpha, beta) -> (alpha, alpha + beta) applied at the top split, then
// recursively inside each half.
void phi_block(BitVec& bits, std::size_t lo, std::size_t len) {
    if (len <= 1) return;
    const std::size_t half = len / 2;
    for (std::size_t m = 0; m < half; ++m)
        if (bits.get(lo + m)) bits.flip(lo + half + m);
    phi_block(bits, lo, half);
    phi_block(bits, lo + half, half);
}

void phi_block_inverse(BitVec& bits, std::size_t lo, std::size_t len) {
    if (len <= 1) return;
    const std::size_t half = len / 2;
    phi_block_inverse(bits, lo, half);
    phi_block_inverse(bits, lo + half, half);
    for (std::size_t m = 0; m < half; ++m)
        if (bits.get(lo + m)) bits.flip(lo + half + m);
}

std::uint32_t k_from_block(std::size_t len) {
    if (len == 0 || (len & (len - 1)) != 0)
        throw Error("vector length must be a power of two, got " + std::to_string(len));
    const auto k = static_cast<std::uint32_t>(std::countr_zero(len));
    require_valid_k(k);
    return k;
}

// Subset-sum passes over coefficient bits from_bit ... to_bit-1 only (bit j of
// the coefficient index corresponds to the variable v_{j+1}).
void partial_zeta(BitVec& bits, std::uint32_t k, std::uint32_t from_bit, std::uint32_t to_bit) {
    const std::size_t total = std::size_t{1} << k;
    for (std::uint32_t i = from_bit; i < to_bit; ++i) {
        const std::size_t step = std::size_t{1} << i;
        for (std::size_t m = 0; m < total; ++m)
            if ((m & step) != 0 && bits.get(m ^ step)) bits.flip(m);
    }
}

}  // namespace

BitVec phi(const Elem& a) {
    BitVec out = a.coeffs;
    phi_block(out, 0, out.size());
    return out;
}

Elem phi_inverse(const BitVec& w) {
    const std::uint32_t k = k_from_block(w.size());
    Elem a = Elem::zero(k);
    a.coeffs = w;
    phi_block_inverse(a.coeffs, 0, a.coeffs.size());
    return a;
}

BitVec phi_word(const Word& x) {
    if (x.empty()) throw Error("empty word");
    const std::size_t blk = x[0].coeffs.size();
    BitVec out(x.size() * blk);
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j].k != x[0].k) throw Error("mixed levels in word");
        const BitVec img = phi(x[j]);
        for (std::size_t b = 0; b < blk; ++b)
            if (img.get(b)) out.set(j * blk + b, true);
    }
    return out;
}

Word phi_word_inverse(std::uint32_t k, const BitVec& w) {
    require_valid_k(k);
    const std::size_t blk = std::size_t{1} << k;
    if (w.size() == 0 || w.size() % blk != 0)
        throw Error("vector length " + std::to_string(w.size()) +
                    " is not a positive multiple of 2^k = " + std::to_string(blk));
    const std::size_t n = w.size() / blk;
    Word out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        BitVec chunk(blk);
        for (std::size_t b = 0; b < blk; ++b)
            if (w.get(j * blk + b)) chunk.set(b, true);
        out.push_back(phi_inverse(chunk));
    }
    return out;
}

std::vector<Elem> psi(const Elem& a, std::uint32_t p) {
    if (p > a.k)
        throw Error("psi requires p <= k, got p = " + std::to_string(p) +
                    ", k = " + std::to_string(a.k));
    // Summing alpha_D over D subset of B is the subset-sum transform in the
    // high coefficient bits (those of the variables v_{p+1}, ..., v_k).
    BitVec bits = a.coeffs;
    partial_zeta(bits, a.k, p, a.k);
    const std::size_t s = std::size_t{1} << (a.k - p);
    const std::size_t low = std::size_t{1} << p;
    std::vector<Elem> slots;
    slots.reserve(s);
    for (std::size_t hi = 0; hi < s; ++hi) {
        Elem e = Elem::zero(p);
        for (std::size_t m = 0; m < low; ++m)
            if (bits.get(m | (hi << p))) e.coeffs.set(m, true);
        slots.push_back(std::move(e));
    }
    return slots;
}

Elem psi_inverse(const std::vector<Elem>& slots) {
    if (slots.empty()) throw Error("psi_inverse requires at least one slot");
    const std::size_t s = slots.size();
    if ((s & (s - 1)) != 0)
        throw Error("slot count must be a power of two, got " + std::to_string(s));
    const std::uint32_t p = slots[0].k;
    const auto k = static_cast<std::uint32_t>(p + std::countr_zero(s));
    require_valid_k(k);
    const std::size_t low = std::size_t{1} << p;
    Elem a = Elem::zero(k);
    for (std::size_t hi = 0; hi < s; ++hi) {
        if (slots[hi].k != p) throw Error("mixed levels in psi_inverse slots");
        for (std::size_t m = 0; m < low; ++m)
            if (slots[hi].coeffs.get(m)) a.coeffs.set(m | (hi << p), true);
    }
    // The subset-sum transform restricted to the high bits is an involution.
    partial_zeta(a.coeffs, k, p, k);
    return a;
}

namespace {

void require_high_flips(std::uint32_t p, std::uint32_t k, VarSet flips) {
    if (flips >= (std::uint32_t{1} << k))
        throw Error("variable set " + format_varset(flips) + " exceeds k = " + std::to_string(k));
    if ((flips & ((std::uint32_t{1} << p) - 1)) != 0)
        throw Error("twist set " + format_varset(flips) + " must be a subset of {" +
                    std::to_string(p + 1) + ",...," + std::to_string(k) + "}");
}

}  // namespace

std::vector<Elem> psi_bar(const Elem& a, std::uint32_t p, VarSet flips) {
    if (p > a.k) throw Error("psi_bar requires p <= k");
    require_high_flips(p, a.k, flips);
    return psi(theta(a, flips), p);
}

Elem psi_bar_inverse(const std::vector<Elem>& slots, VarSet flips) {
    Elem a = psi_inverse(slots);
    require_high_flips(slots[0].k, a.k, flips);
    return theta(a, flips);
}

std::vector<Word> psi_word(const Word& x, std::uint32_t p) {
    if (x.empty()) throw Error("empty word");
    const std::uint32_t k = x[0].k;
    if (p > k) throw Error("psi requires p <= k");
    const std::size_t s = std::size_t{1} << (k - p);
    std::vector<Word> strands(s);
    for (auto& w : strands) w.reserve(x.size());
    for (const auto& coord : x) {
        if (coord.k != k) throw Error("mixed levels in word");
        std::vector<Elem> slots = psi(coord, p);
        for (std::size_t i = 0; i < s; ++i) strands[i].push_back(std::move(slots[i]));
    }
    return strands;
}

Word psi_word_inverse(const std::vector<Word>& strands) {
    if (strands.empty() || strands[0].empty())
        throw Error("psi_word_inverse requires nonempty strands");
    const std::size_t n = strands[0].size();
    for (const auto& w : strands)
        if (w.size() != n) throw Error("strand lengths differ");
    Word out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Elem> slots;
        slots.reserve(strands.size());
        for (const auto& w : strands) slots.push_back(w[j]);
        out.push_back(psi_inverse(slots));
    }
    return out;
}

}  // namespace akcodes
