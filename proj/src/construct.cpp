#include "akcodes/construct.hpp"

#include <algorithm>
#include <numeric>

#include "akcodes/gray.hpp"

namespace akcodes {

namespace {

std::vector<BitVec> split_by_block(const BitVec& w, std::size_t blk) {
    if (blk == 0 || w.size() % blk != 0)
        throw Error("vector length " + std::to_string(w.size()) +
                    " is not a multiple of the block size " + std::to_string(blk));
    const std::size_t len = w.size() / blk;
    std::vector<BitVec> strands(blk, BitVec(len));
    for (std::size_t j = 0; j < len; ++j)
        for (std::size_t i = 0; i < blk; ++i)
            if (w.get(j * blk + i)) strands[i].set(j, true);
    return strands;
}

BitVec merge_by_block(const std::vector<BitVec>& strands) {
    if (strands.empty()) throw Error("no strands to merge");
    const std::size_t blk = strands.size();
    const std::size_t len = strands[0].size();
    for (const auto& s : strands)
        if (s.size() != len) throw Error("strand lengths differ");
    BitVec out(len * blk);
    for (std::size_t j = 0; j < len; ++j)
        for (std::size_t i = 0; i < blk; ++i)
            if (strands[i].get(j)) out.set(j * blk + i, true);
    return out;
}

void validate_S(std::uint32_t k, VarSet S) {
    require_valid_k(k);
    if (S >= (std::uint32_t{1} << k))
        throw Error("variable set " + format_varset(S) + " exceeds k = " + std::to_string(k));
}

}  // namespace

std::vector<BitVec> gamma_split(const BitVec& w, std::uint32_t k) {
    require_valid_k(k);
    return split_by_block(w, std::size_t{1} << k);
}

BitVec gamma_merge(const std::vector<BitVec>& strands) { return merge_by_block(strands); }

std::vector<BitVec> gamma1_split(const BitVec& w, std::uint32_t k) {
    require_valid_k(k);
    if (k == 0) throw Error("gamma_1 requires k >= 1");
    return split_by_block(w, std::size_t{1} << (k - 1));
}

BitVec gamma1_merge(const std::vector<BitVec>& strands) { return merge_by_block(strands); }

Code construct_even(std::uint32_t k, VarSet S, const std::vector<BinaryCode>& inputs) {
    validate_S(k, S);
    const std::size_t points = std::size_t{1} << k;
    if (inputs.size() != points)
        throw Error("expected " + std::to_string(points) + " input codes, got " +
                    std::to_string(inputs.size()));
    const std::size_t n = inputs[0].length();
    if (n == 0 || n % 2 != 0) throw Error("this construction requires even length");
    for (std::size_t b = 0; b < points; ++b) {
        if (inputs[b].length() != n) throw Error("input code lengths differ");
        if (!inputs[b].closed_under_shift(1))
            throw Error("input code " + std::to_string(b + 1) + " is not cyclic");
    }
    for (std::size_t b = 0; b < points; ++b) {
        const std::size_t bp = b ^ S;
        for (const auto& row : inputs[bp].basis()) {
            if (!inputs[b].contains(shift_word(row, 1)))
                throw Error("inputs " + std::to_string(b + 1) + " and " + std::to_string(bp + 1) +
                            " are not compatible for S = " + format_varset(S) +
                            ": the shift of a basis word of input " + std::to_string(bp + 1) +
                            " (" + shift_word(row, 1).str() + ") is outside input " +
                            std::to_string(b + 1));
        }
    }
    Code out = Code::from_components(k, n, inputs);
    if (!is_theta_cyclic(out, S)) throw Error("internal error: construction lost cyclicity");
    return out;
}

Code construct_odd(std::uint32_t k, VarSet S, const std::vector<BinaryCode>& inputs) {
    validate_S(k, S);
    if (k == 0) throw Error("this construction requires k >= 1");
    if (S == 0)
        throw Error(
            "this construction requires a nonempty variable set (no conjugating "
            "permutation exists for the empty set with odd length)");
    const std::size_t half = std::size_t{1} << (k - 1);
    if (inputs.size() != half)
        throw Error("expected " + std::to_string(half) + " input codes, got " +
                    std::to_string(inputs.size()));
    const std::size_t len2n = inputs[0].length();
    if (len2n == 0 || len2n % 2 != 0 || (len2n / 2) % 2 != 1)
        throw Error("input codes must have length 2n with n odd, got length " +
                    std::to_string(len2n));
    const std::size_t n = len2n / 2;
    for (const auto& c : inputs) {
        if (c.length() != len2n) throw Error("input code lengths differ");
        if (!c.closed_under_shift(1)) throw Error("all input codes must be cyclic");
    }

    const IndexPerm unscramble = sigma_S1(S, n, k).inverse();
    std::vector<Word> gens;
    for (std::size_t i = 0; i < half; ++i) {
        for (const auto& row : inputs[i].basis()) {
            std::vector<BitVec> strands(half, BitVec(len2n));
            strands[i] = row;
            const BitVec merged = gamma1_merge(strands);
            gens.push_back(phi_word_inverse(k, unscramble.apply(merged)));
        }
    }
    if (gens.empty()) {
        // All inputs are zero codes; the result is the zero code.
        return Code::from_components(
            k, n, std::vector<BinaryCode>(std::size_t{1} << k, BinaryCode(n)));
    }
    Code out = Code::span(k, n, std::move(gens));
    if (!is_theta_cyclic(out, S)) throw Error("internal error: construction lost cyclicity");
    return out;
}

IndexPerm induced_mu(std::uint32_t k, std::uint32_t p, VarSet S) {
    validate_S(k, S);
    if (p >= k) throw Error("slot pairing requires p < k");
    const std::size_t s = std::size_t{1} << (k - p);
    const std::size_t hi_mask = static_cast<std::size_t>(S) >> p;
    std::vector<std::size_t> img(s);
    for (std::size_t hi = 0; hi < s; ++hi) img[hi] = (hi ^ hi_mask) + 1;
    return IndexPerm::from_images(img);
}

namespace {

// T_{Theta_S'}(C_i) subset of C_{mu(i)} for all i, on F2-bases; returns the
// violating (slot index, word) if any.
std::optional<std::pair<std::size_t, Word>> pairing_violation(VarSet S_low,
                                                              const std::vector<Code>& inputs,
                                                              const IndexPerm& mu) {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        for (const auto& w : inputs[i].f2_basis()) {
            if (!inputs[mu.map(i + 1) - 1].contains(theta_shift(w, S_low)))
                return std::make_pair(i, w);
        }
    }
    return std::nullopt;
}

}  // namespace

Code construct_from_ap(VarSet S, std::uint32_t k, const std::vector<Code>& inputs,
                       const std::optional<IndexPerm>& mu) {
    validate_S(k, S);
    if (inputs.empty()) throw Error("empty input list");
    const std::uint32_t p = inputs[0].k();
    if (p >= k) throw Error("input codes must live over a proper subring (p < k)");
    const std::size_t s = std::size_t{1} << (k - p);
    if (inputs.size() != s)
        throw Error("expected " + std::to_string(s) + " input codes over A_" + std::to_string(p) +
                    ", got " + std::to_string(inputs.size()));
    const std::size_t n = inputs[0].n();
    for (const auto& c : inputs) {
        if (c.k() != p) throw Error("input codes have mixed levels");
        if (c.n() != n) throw Error("input codes have mixed lengths");
    }
    for (std::size_t i = 0; i < s; ++i) {
        for (const auto& w : inputs[i].f2_basis()) {
            Word sh = w;
            sh = theta_shift(theta_shift(sh, 0), 0);  // plain double shift
            if (!inputs[i].contains(sh))
                throw Error("input code " + std::to_string(i + 1) +
                            " is not 2-quasi-cyclic over A_" + std::to_string(p));
        }
    }
    const VarSet S_low = S & ((VarSet{1} << p) - 1);
    const IndexPerm forced = induced_mu(k, p, S);
    if (mu && !(*mu == forced))
        throw Error("the slot pairing is forced by the variable set: expected " +
                    forced.cycle_string() + ", got " + mu->cycle_string());
    if (auto viol = pairing_violation(S_low, inputs, forced)) {
        throw Error("input code " + std::to_string(viol->first + 1) +
                    " violates the pairing condition for S = " + format_varset(S) +
                    ": the twisted shift of " + format_word(viol->second) +
                    " is outside input code " + std::to_string(forced.map(viol->first + 1)));
    }
    Code out = psi_compose(k, inputs);
    if (!is_theta_cyclic(out, S)) throw Error("internal error: construction lost cyclicity");
    return out;
}

std::optional<IndexPerm> find_mu(VarSet S_low, const std::vector<Code>& inputs) {
    const std::size_t s = inputs.size();
    if (s == 0 || s > 4) throw Error("pairing search supports up to 4 slots");
    std::vector<std::size_t> img(s);
    std::iota(img.begin(), img.end(), std::size_t{1});
    do {
        const IndexPerm mu = IndexPerm::from_images(img);
        if (!pairing_violation(S_low, inputs, mu)) return mu;
    } while (std::next_permutation(img.begin(), img.end()));
    return std::nullopt;
}

std::vector<SkewPoly> lift_generators(std::uint32_t k, VarSet S,
                                      const std::vector<std::vector<SkewPoly>>& per_slot) {
    validate_S(k, S);
    const std::size_t s = per_slot.size();
    if (s < 2 || (s & (s - 1)) != 0)
        throw Error("expected a power-of-two number of slots (at least 2), got " +
                    std::to_string(s));
    std::uint32_t shift = 0;
    while ((std::size_t{1} << shift) < s) ++shift;
    if (shift > k) throw Error("more slots than subring levels allow");
    const std::uint32_t p = k - shift;
    std::vector<SkewPoly> out;
    for (std::size_t i = 0; i < s; ++i) {
        for (const auto& g : per_slot[i]) {
            if (g.k != p)
                throw Error("slot polynomial level " + std::to_string(g.k) +
                            " differs from p = " + std::to_string(p));
            std::vector<Elem> lifted;
            lifted.reserve(g.coeffs.size());
            for (const auto& c : g.coeffs) {
                std::vector<Elem> slots(s, Elem::zero(p));
                slots[i] = c;
                lifted.push_back(psi_inverse(slots));
            }
            out.push_back(SkewPoly::make(k, S, std::move(lifted)));
        }
    }
    return out;
}

BinaryCode binary_cyclic_code(std::size_t n, const SkewPoly& g) {
    if (g.k != 0) throw Error("binary generator polynomials must be variable-free");
    if (n == 0) throw Error("length must be positive");
    const Word w = mod_xn_minus_1(g, n);
    BitVec row(n);
    for (std::size_t j = 0; j < n; ++j)
        if (!w[j].is_zero()) row.set(j, true);
    std::vector<BitVec> rows;
    rows.reserve(n);
    for (std::size_t sh = 0; sh < n; ++sh) rows.push_back(shift_word(row, sh));
    return BinaryCode::span(n, rows);
}

}  // namespace akcodes
