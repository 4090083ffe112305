#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "akcodes/binary_code.hpp"
#include "akcodes/code.hpp"
#include "akcodes/common.hpp"
#include "akcodes/perm.hpp"
#include "akcodes/skew_poly.hpp"

namespace akcodes {

// Gamma: de-interleave a vector of length n * 2^k into its 2^k strands of
// length n; strand i (0-based) collects positions j * 2^k + i. Composed with
// the Gray map, Gamma recovers the CRT components: strand i of Phi_k(x) is
// the evaluation strand of x at point i.
std::vector<BitVec> gamma_split(const BitVec& w, std::uint32_t k);
BitVec gamma_merge(const std::vector<BitVec>& strands);

// Gamma_1: de-interleave a vector of length n * 2^k = 2n * 2^(k-1) into
// 2^(k-1) strands of length 2n; strand i collects positions j * 2^(k-1) + i.
std::vector<BitVec> gamma1_split(const BitVec& w, std::uint32_t k);
BitVec gamma1_merge(const std::vector<BitVec>& strands);

// Construction for even length: from 2^k binary cyclic codes of even length
// n, the code over A_k whose CRT component b is inputs[b]. The result is
// Theta_S-cyclic provided the paired inputs agree: T(inputs[b XOR mask(S)])
// must lie in inputs[b] for every b (for cyclic inputs this says the paired
// inputs are equal); violations are reported with a witness pair.
Code construct_even(std::uint32_t k, VarSet S, const std::vector<BinaryCode>& inputs);

// Construction for odd length: from 2^(k-1) binary cyclic codes of length 2n
// (n odd, S nonempty), the Theta_S-cyclic code over A_k of length n obtained
// by pulling the product code back through sigma_S1 and the Gray map: the
// words phi_word_inverse(sigma_S1^(-1) image) of an F2-basis of the product
// generate the result as an A_k-module.
Code construct_odd(std::uint32_t k, VarSet S, const std::vector<BinaryCode>& inputs);

// The slot pairing forced by Theta_S on Psi_{k,p} slots: slot i (1-based,
// subsets of {p+1..k} in chi-order) pairs with the slot of B_i symmetric-
// difference (S intersect {p+1..k}); as 0-based slot numbers this is
// hi -> hi XOR (mask(S) >> p).
IndexPerm induced_mu(std::uint32_t k, std::uint32_t p, VarSet S);

// Construction from codes over the subring A_p: given s = 2^(k-p) codes over
// A_p of equal length (any p < k; the inputs' level determines p), each
// 2-quasi-cyclic and satisfying T_{Theta_S'}(C_i) subset of C_{mu(i)} with
// S' = S intersect {1..p} and mu the induced pairing, returns
// Psi_{k,p}^(-1)(C_1 x ... x C_s), which is Theta_S-cyclic. A supplied mu
// must equal the induced one (the pairing is forced, not free); condition
// violations are reported with the witness (slot, codeword).
Code construct_from_ap(VarSet S, std::uint32_t k, const std::vector<Code>& inputs,
                       const std::optional<IndexPerm>& mu = std::nullopt);

// Search for a slot pairing making the from-ap condition hold: the first
// permutation mu (in lexicographic order of image tuples) with
// T_{Theta_S'}(C_i) subset of C_{mu(i)} for all i. Requires s! <= 24
// (s <= 4); diagnostic companion to construct_from_ap.
std::optional<IndexPerm> find_mu(VarSet S_low, const std::vector<Code>& inputs);

// Lift generator polynomials of the slot codes to generator polynomials over
// A_k: a slot-i polynomial g becomes the polynomial over A_k whose degree-d
// coefficient is Psi_{k,p}^(-1)(0, ..., coeff_d(g), ..., 0) (slot i). The
// lifted polynomials of all slots together generate the from-ap code.
std::vector<SkewPoly> lift_generators(std::uint32_t k, VarSet S,
                                      const std::vector<std::vector<SkewPoly>>& per_slot);

// Binary cyclic code of length n generated by a polynomial over F2 (level-0
// coefficients), i.e. the span of all cyclic shifts of its coefficient word.
BinaryCode binary_cyclic_code(std::size_t n, const SkewPoly& g);

}  // namespace akcodes
