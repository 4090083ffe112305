#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "akcodes/bitvec.hpp"
#include "akcodes/common.hpp"

namespace akcodes {

// An element of A_k = F2[v1,...,vk] / (vi^2 = vi, vi*vj = vj*vi): a square-free
// Boolean polynomial. Coefficients are indexed by monomials v_B = prod_{i in B} vi
// with B a subset of {1,...,k}; the coefficient of v_B sits at bit
// idx(B) = sum_{i in B} 2^(i-1). The ring has 2^(2^k) elements, characteristic 2,
// and 1 as its only unit.
struct Elem {
    std::uint32_t k = 0;
    BitVec coeffs;  // 2^k bits

    Elem() = default;
    Elem(std::uint32_t k_, BitVec c) : k(k_), coeffs(std::move(c)) {}

    static Elem zero(std::uint32_t k);
    static Elem one(std::uint32_t k);
    // The generator v_i, 1 <= i <= k.
    static Elem gen(std::uint32_t k, unsigned i);
    // The monomial v_B for a subset mask (bit i-1 <-> v_i present).
    static Elem monomial(std::uint32_t k, std::uint32_t subset_mask);

    bool is_zero() const { return !coeffs.any(); }
    bool operator==(const Elem&) const = default;
};

void require_valid_k(std::uint32_t k);

Elem add(const Elem& a, const Elem& b);

// Product via the CRT route: evaluate both factors at all 2^k points, AND
// pointwise, interpolate back. O(k * 2^k).
Elem mul(const Elem& a, const Elem& b);

// The evaluation vector: bit b holds a(v1=b_1,...,vk=b_k), assignments ordered
// by the integer b = sum b_i 2^(i-1). Equals the subset-sum (zeta) transform of
// the coefficient vector, which is an involution over GF(2), so crt_inverse is
// the same transform. This is the isomorphism A_k -> F2^(2^k): sums map to XOR,
// products to AND.
BitVec crt_forward(const Elem& a);
Elem crt_inverse(std::uint32_t k, const BitVec& values);

// theta_S: the automorphism sending v_i to v_i + 1 for i in S and fixing the
// other generators. Always an involution.
Elem theta(const Elem& a, VarSet s);

// A general ring automorphism: v_i maps to v_{target[i-1]} + flip[i-1], with
// target a permutation of {1,...,k}. Validated on construction.
struct Automorphism {
    std::uint32_t k = 0;
    std::vector<std::uint8_t> target;  // 1-based images
    std::vector<std::uint8_t> flip;    // 1 adds the constant 1

    static Automorphism theta_s(std::uint32_t k, VarSet s);
    static Automorphism make(std::uint32_t k, std::vector<std::uint8_t> target,
                             std::vector<std::uint8_t> flip);
};

// Applies via the induced permutation of CRT evaluation points.
Elem apply(const Automorphism& f, const Elem& a);

Automorphism compose(const Automorphism& f, const Automorphism& g);  // f after g
bool is_involution(const Automorphism& f);

enum class InvolutionKind {
    not_involution,
    theta_subset,  // v_i -> v_i + flip_i, i.e. some theta_S
    paired_flip,   // involution moving at least one index (i <-> j with equal flips)
};
InvolutionKind classify_involution(const Automorphism& f);

// Smallest single generator of the ideal generated by the given elements:
// the element whose evaluation vector is the OR of theirs, which expands to
// sum over nonempty subsets A of prod_{i in A} a_i (characteristic 2).
Elem principal_generator(const std::vector<Elem>& gens);

// One maximal ideal <w1,...,wk> with w_i = v_i (flip bit clear) or 1 + v_i
// (flip bit set). The ideal is the kernel of evaluation at the point
// b = flips, and has 2^(2^k - 1) elements.
struct MaximalIdeal {
    std::uint32_t k = 0;
    std::uint32_t flips = 0;  // bit i-1 set means w_i = 1 + v_i
    Elem generator;           // principal generator of the ideal

    std::uint32_t excluded_point() const { return flips; }
};

// All 2^k maximal ideals, ordered by their flip mask.
std::vector<MaximalIdeal> maximal_ideals(std::uint32_t k);

// Text form: monomials joined by '+', each a product "v1v3..." ("1" for the
// empty monomial), ordered by ascending idx(B). Examples: "0", "1+v1+v1v2".
std::string format_elem(const Elem& a);
Elem parse_elem(std::uint32_t k, const std::string& text);

// A length-n word over A_k.
using Word = std::vector<Elem>;

std::string format_word(const Word& w);

}  // namespace akcodes
