#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "akcodes/binary_code.hpp"
#include "akcodes/common.hpp"
#include "akcodes/ring.hpp"

namespace akcodes {

// A linear code over A_k of length n: a left A_k-submodule of A_k^n. Stored
// through its CRT decomposition: component b (0-based, b in {0,...,2^k-1}) is
// the binary code {(eval_b(x_1), ..., eval_b(x_n)) : x in C}, where eval_b is
// evaluation of polynomials in v_1,...,v_k at the point with bits of b.
// Conversely C = {x : eval_b(x) in component b for all b}, so the components
// determine the code. A list of module generators is kept alongside.
class Code {
  public:
    Code() = default;

    // A_k-linear span of the given words.
    static Code span(std::uint32_t k, std::size_t n, std::vector<Word> generators);
    // Code with the given CRT components (all of length n, 2^k of them).
    // Canonical generators e_b * row are synthesized, where e_b is the
    // idempotent with eval_b(e_b) = 1 and eval_{b'}(e_b) = 0 otherwise.
    static Code from_components(std::uint32_t k, std::size_t n,
                                std::vector<BinaryCode> components);

    std::uint32_t k() const { return k_; }
    std::size_t n() const { return n_; }
    const std::vector<Word>& generators() const { return generators_; }
    const std::vector<BinaryCode>& components() const { return components_; }
    const BinaryCode& component(std::size_t b) const;

    bool contains(const Word& x) const;
    bool operator==(const Code& other) const {
        return k_ == other.k_ && n_ == other.n_ && components_ == other.components_;
    }

    // log2 of the code size: the sum of the component dimensions.
    unsigned long long log2_size() const;
    // "2^L" with L = log2_size().
    std::string cardinality() const;
    bool is_zero() const { return log2_size() == 0; }

    // Words e_b * row for each component basis row: an F2-basis of C.
    std::vector<Word> f2_basis() const;

  private:
    std::uint32_t k_ = 1;
    std::size_t n_ = 0;
    std::vector<Word> generators_;
    std::vector<BinaryCode> components_;
};

// The CRT strand of a word at evaluation point b: (eval_b(x_1),...,eval_b(x_n)).
BitVec crt_strand(const Word& x, std::size_t b);

// Theta_S-cyclicity: T_Theta(C) subset of C, checked on an F2-basis of C.
bool is_theta_cyclic(const Code& c, VarSet S);

// Gray image Phi_k(C): binary code of length n * 2^k spanned by the images of
// an F2-basis (Phi_k is F2-linear and injective, so dimensions agree).
BinaryCode gray_image(const Code& c);

// Whether b is closed under the shift by ell positions; ell must divide the
// length.
bool is_quasi_cyclic(const BinaryCode& b, std::size_t ell);

// The three equivalent readings of Theta_S-cyclicity:
//  (a) the Gray image is fixed by Sigma_S;
//  (b) the sigma_S1- (n odd) or sigma_S2-image (n even) of the Gray image is
//      quasi-cyclic of index 2^(k-1) resp. 2^k — except for n odd with S
//      empty, where no conjugator exists and the Gray image itself is tested
//      for 2^k-quasi-cyclicity (Sigma_empty is exactly that shift);
//  (c) T_Theta-closure over A_k.
struct CharacterizationReport {
    bool sigma_fixes_gray = false;
    bool conjugated_quasi_cyclic = false;
    std::size_t quasi_index = 0;
    bool theta_cyclic = false;
    std::string note;

    bool agree() const {
        return sigma_fixes_gray == conjugated_quasi_cyclic &&
               conjugated_quasi_cyclic == theta_cyclic;
    }
    bool all_hold() const { return sigma_fixes_gray && conjugated_quasi_cyclic && theta_cyclic; }
};
CharacterizationReport check_characterization_1(const Code& c, VarSet S);

// Dual with respect to the Hermitian-type form [x, y]_T = sum_j x_j *
// Theta_T(y_j) (T empty gives the Euclidean form). Componentwise:
// component b of the dual is the binary dual of component (b XOR mask(T)).
Code dual(const Code& c, VarSet T);

// C == dual(C, T).
bool is_self_dual(const Code& c, VarSet T);

// The two componentwise readings of self-duality, for diagnostics:
// first:  component b == binary dual of component (b XOR mask(T))  [dualized]
// second: component b == component (b XOR mask(T))                 [as printed]
std::pair<bool, bool> self_dual_component_readings(const Code& c, VarSet T);

// Distance computations. A result without a value carries the reason the
// computation was out of cap; values are exact, never truncated.
struct DistanceResult {
    std::optional<unsigned> d;
    std::string note;
};

// Minimum Hamming distance over A_k (number of nonzero coordinates) via the
// component identity d(C) = min over nonzero components b of d(component b).
// Errors on the zero code. dim_cap bounds the component dimensions fed to the
// binary enumerator.
DistanceResult min_distance_components(const Code& c, unsigned dim_cap = 28);

// The same distance by direct enumeration of the code (2^log2_size words);
// log2_size must be <= log_cap or the result is marked infeasible.
DistanceResult min_distance_brute(const Code& c, unsigned log_cap = 24);

// Minimum distance of the Gray image (binary, length n * 2^k).
DistanceResult gray_min_distance(const Code& c, unsigned dim_cap = 28);

// Slot decomposition under Psi_{k,p}: 2^(k-p) codes over A_p of the same
// length, the i-th holding the i-th slot strand of every codeword. Component
// b_low of slot code hi is component (b_low + hi * 2^p) of c.
std::vector<Code> psi_decompose(const Code& c, std::uint32_t p);

// Inverse of psi_decompose: assembles a level-k code from 2^(k-p) level-p
// codes of equal length by the same component regrouping.
Code psi_compose(std::uint32_t k, const std::vector<Code>& slots);

}  // namespace akcodes
