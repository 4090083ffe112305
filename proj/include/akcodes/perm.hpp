#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "akcodes/binary_code.hpp"
#include "akcodes/common.hpp"

namespace akcodes {

// A permutation p of the index set {1, ..., size}. Applying p to a vector x
// produces the vector y with y_j = x_{p(j)} (the "pull" convention): the
// induced map on words is x -> (x_{p(1)}, ..., x_{p(size)}).
class IndexPerm {
  public:
    IndexPerm() = default;
    // Identity permutation on {1, ..., size}.
    explicit IndexPerm(std::size_t size);
    // images1[j-1] = p(j), 1-based values. Must be a bijection.
    static IndexPerm from_images(const std::vector<std::size_t>& images1);

    std::size_t size() const { return img_.size(); }
    // 1-based lookup: p(j) for j in {1, ..., size}.
    std::size_t map(std::size_t j) const;
    // 0-based lookup: image of j in {0, ..., size-1}.
    std::size_t map0(std::size_t j) const;

    bool operator==(const IndexPerm&) const = default;
    bool is_identity() const;

    IndexPerm inverse() const;
    // Sequencing in application order: r = p.then(q) is the permutation with
    // r.apply(x) == q.apply(p.apply(x)) for every vector x. (As an index map
    // this is r(j) = p(q(j)).)
    IndexPerm then(const IndexPerm& q) const;
    // e-fold self-sequencing; e may be negative (inverse powers) or zero.
    IndexPerm power(long long e) const;

    // Order as a group element (least m >= 1 with p^m = id).
    unsigned long long order() const;
    // Disjoint cycles, 1-based, each rotated to start at its least element,
    // sorted by that element. Fixed points are included as length-1 cycles.
    std::vector<std::vector<std::size_t>> cycles() const;
    // Cycle lengths, sorted descending.
    std::vector<std::size_t> cycle_lengths() const;
    std::string cycle_string() const;

    // y_j = x_{p(j)}.
    BitVec apply(const BitVec& x) const;
    // Image of a binary code under the induced coordinate map.
    BinaryCode apply(const BinaryCode& c) const;
    template <typename T>
    std::vector<T> apply_vec(const std::vector<T>& x) const {
        if (x.size() != img_.size())
            throw Error("permutation size mismatch");
        std::vector<T> out;
        out.reserve(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) out.push_back(x[img_[j]]);
        return out;
    }

  private:
    std::vector<std::size_t> img_;  // 0-based images
};

// sigma_{i,k}: the permutation of {1, ..., 2^k} that, on 0-based points
// q in {0, ..., 2^k - 1}, sends q to q XOR 2^(i-1). Requires 1 <= i <= k.
IndexPerm sigma_ik(unsigned i, std::uint32_t k);

// Product of sigma_{i,k} over i in S (commuting involutions): q -> q XOR mask(S).
IndexPerm sigma_Sk(VarSet S, std::uint32_t k);

// Sigma_S on n*2^k positions. With positions written 0-based as j = a*2^k + b
// (coordinate block a, point b), Sigma_S sends j to ((a-1) mod n)*2^k +
// (b XOR mask(S)); it factors as tau_S composed with T^(2^k) in either order.
IndexPerm big_sigma_S(VarSet S, std::size_t n, std::uint32_t k);

// The true multiplicative order of Sigma_S. For nonempty S this is n when n is
// even and 2n when n is odd; for S empty it is n for both parities (Sigma_empty
// is the plain shift T^(2^k)), and 1 when additionally n = 1.
unsigned long long ord_sigma_S(VarSet S, std::size_t n, std::uint32_t k);

// Conjugating permutation for odd n and nonempty S. On words it satisfies
//   apply(sigma_S1, apply(Sigma_S, x)) == shift_word(apply(sigma_S1, x), 2^(k-1)),
// equivalently as permutations
//   big_sigma_S(S,n,k).then(sigma_S1(S,n,k))
//     == sigma_S1(S,n,k).then(shift_perm(n*2^k, 2^(k-1))),
// so the sigma_S1-image of a Sigma_S-invariant binary code is
// 2^(k-1)-quasi-cyclic. Built from one representative of each Sigma_S-cycle:
// the 0-based position a*2^(k-1) + r maps to sigma_S^(2n-1-a)(reps[r]) where
// reps lists, in increasing order, the smaller element q of each pair
// {q, q XOR mask(S)}.
// Errors: n even (use sigma_S2), S empty (no conjugator exists: Sigma_empty
// has order n but the shift by 2^(k-1) has order 2n).
IndexPerm sigma_S1(VarSet S, std::size_t n, std::uint32_t k);

// Conjugating permutation for even n (any S, including empty): the 0-based
// position a*2^k + r maps to sigma_S^(n-1-a)(r). Satisfies the analogous
// identity with shift_perm(n*2^k, 2^k). Errors: n odd (use sigma_S1).
IndexPerm sigma_S2(VarSet S, std::size_t n, std::uint32_t k);

// Plain cyclic shift T^ell as an index permutation on n positions: applying it
// to x yields the same vector as shift_word(x, ell).
IndexPerm shift_perm(std::size_t n, std::size_t ell);

}  // namespace akcodes
