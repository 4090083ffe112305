#pragma once

#include <cstdint>
#include <vector>

#include "akcodes/common.hpp"
#include "akcodes/ring.hpp"

namespace akcodes {

// Gray map phi_k : A_k -> F2^(2^k), defined recursively by
//   phi_k(alpha + beta * v_k) = (phi_{k-1}(alpha), phi_{k-1}(alpha + beta))
// with phi_0 = id on F2. Computed by that recursion directly; the fact that
// the result equals crt_forward (evaluation at all points in binary order) is
// a theorem exercised by tests, not an assumption of this implementation.
BitVec phi(const Elem& a);

// Inverse Gray map. w.size() must be 2^k for some k <= kMaxVars.
Elem phi_inverse(const BitVec& w);

// Coordinatewise Gray map of a word over A_k: the images of the n coordinates
// are concatenated in coordinate order, giving a vector of length n * 2^k.
BitVec phi_word(const Word& x);

// Inverse of phi_word: w.size() must be a multiple n * 2^k of 2^k.
Word phi_word_inverse(std::uint32_t k, const BitVec& w);

// Psi_{k,p} : A_k -> A_p^s with s = 2^(k-p), for 0 <= p <= k. Writing
// a = sum over subsets D of {p+1,...,k} of alpha_D * prod_{i in D} v_i with
// alpha_D in A_p, slot number i (1-based) holds sum over D subset of B_i of
// alpha_D, where B_1, ..., B_s enumerate the subsets of {p+1,...,k} ordered by
// chi(B) = sum_{j in B} 2^(j-p-1) (so B_1 is empty and B_s is the full set).
std::vector<Elem> psi(const Elem& a, std::uint32_t p);

// Inverse of psi: slots – s = 2^(k-p) elements of A_p with k = p + log2(s).
Elem psi_inverse(const std::vector<Elem>& slots);

// Twisted variant: psi_bar(a) = psi(theta_F(a)) where theta_F substitutes
// v_i -> v_i + 1 for i in flips. Requires flips to be a subset of {p+1,...,k}.
std::vector<Elem> psi_bar(const Elem& a, std::uint32_t p, VarSet flips);
Elem psi_bar_inverse(const std::vector<Elem>& slots, VarSet flips);

// Word forms: a word x over A_k of length n maps to s words over A_p of
// length n (slot strands); the flattened image of x is the concatenation of
// the per-coordinate images psi(x_1), ..., psi(x_n).
std::vector<Word> psi_word(const Word& x, std::uint32_t p);
Word psi_word_inverse(const std::vector<Word>& strands);

}  // namespace akcodes
