#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "akcodes/common.hpp"
#include "akcodes/ring.hpp"

namespace akcodes {

// Element of the skew polynomial ring A_k[x; Theta_S], where the commutation
// rule is x * a = Theta_S(a) * x. Coefficients are stored low degree first
// and kept trimmed (no trailing zero coefficients).
struct SkewPoly {
    std::uint32_t k = 1;
    VarSet S = 0;
    std::vector<Elem> coeffs;

    static SkewPoly zero(std::uint32_t k, VarSet S);
    // Trims trailing zeros; validates S against k and coefficient levels.
    static SkewPoly make(std::uint32_t k, VarSet S, std::vector<Elem> coeffs);

    // Degree, or -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    Elem coeff(std::size_t d) const;  // 0 beyond the stored degree

    bool operator==(const SkewPoly&) const = default;
};

SkewPoly skew_add(const SkewPoly& a, const SkewPoly& b);

// Product in A_k[x; Theta_S]: (a x^i)(b x^j) = a * Theta_S^i(b) x^(i+j).
SkewPoly skew_mul(const SkewPoly& a, const SkewPoly& b);

// Reduction of f modulo the left ideal generated by x^n - 1, returned as the
// coefficient word (c_0, ..., c_{n-1}). Since a x^d = (a x^(d-n)) x^n is
// congruent to a x^(d-n), the fold x^d -> x^(d mod n) carries no twist.
Word mod_xn_minus_1(const SkewPoly& f, std::size_t n);

// Theta-twisted cyclic shift: T_Theta(c_0, ..., c_{n-1}) =
// (Theta_S(c_{n-1}), Theta_S(c_0), ..., Theta_S(c_{n-2})). Under the
// polynomial correspondence this is multiplication by x followed by reduction.
Word theta_shift(const Word& c, VarSet S);

// All words x^(step*i) * g mod (x^n - 1) for 0 <= step*i < 2n and g in gens
// (2n shifts suffice: Theta_S has order at most 2, so the twisted shift has
// order dividing 2n). With step = 1 the A_k-linear span of this set is the
// left module generated by gens; step = 2 gives the closure under
// multiplication by x^2 only (a 2-quasi-cyclic module).
std::vector<Word> span_generators(const std::vector<SkewPoly>& gens, std::size_t n,
                                  unsigned step = 1);

// The rings A_k[x; Theta_S1] and A_k[x; Theta_S2] are isomorphic if and only
// if |S1| = |S2| (any bijection of {1..k} sending S1 onto S2 induces one).
bool skew_ring_isomorphic(std::uint32_t k, VarSet S1, VarSet S2);

// Number of subsets S' of {1..k} with A_k[x; Theta_S'] isomorphic to
// A_k[x; Theta_S]: the binomial coefficient C(k, |S|).
unsigned long long count_isomorphic(std::uint32_t k, VarSet S);

// Polynomial text format. Grammar (whitespace ignored):
//   poly  := term ('+' term)*
//   term  := coef mono | coef | mono
//   mono  := 'x' ('^' uint)?
//   coef  := '1' | vprod | '(' vsum ')'
//   vsum  := vterm ('+' vterm)*
//   vterm := '1' | vprod
//   vprod := 'v' uint ('*'? 'v' uint)*
// Examples: "x^2+1", "x^4+(v1+1)x^3+x^2+v1x+1", "v1v2x^2+(1+v1)x".
SkewPoly parse_poly(std::uint32_t k, VarSet S, const std::string& text);

// Highest degree first; multi-term coefficients parenthesized; unit
// coefficients printed only for the constant term; "0" for the zero poly.
std::string format_poly(const SkewPoly& f);

// Word of length n from a polynomial (reducing mod x^n - 1), and back.
SkewPoly word_to_poly(VarSet S, const Word& c);

}  // namespace akcodes
