#include "akcodes/ring.hpp"

#include <algorithm>
#include <cctype>

namespace akcodes {

void require_valid_k(std::uint32_t k) {
    if (k > kMaxVars) throw Error("k must be at most " + std::to_string(kMaxVars));
}

namespace {

void require_same_ring(const Elem& a, const Elem& b) {
    if (a.k != b.k) throw Error("ring mismatch: elements over different k");
}

// Subset-sum transform over GF(2): out[D] = XOR of in[B] over B subset of D.
// Involution, since every strict superset interval has even size.
void zeta_inplace(BitVec& bits, std::uint32_t k) {
    const std::size_t n = std::size_t(1) << k;
    for (std::uint32_t i = 0; i < k; ++i) {
        const std::size_t step = std::size_t(1) << i;
        for (std::size_t m = 0; m < n; ++m)
            if (m & step) {
                if (bits.get(m ^ step)) bits.flip(m);
            }
    }
}

}  // namespace

Elem Elem::zero(std::uint32_t k) {
    require_valid_k(k);
    return Elem(k, BitVec(std::size_t(1) << k));
}

Elem Elem::one(std::uint32_t k) {
    Elem e = zero(k);
    e.coeffs.set(0, true);
    return e;
}

Elem Elem::gen(std::uint32_t k, unsigned i) {
    if (i < 1 || i > k) throw Error("generator index " + std::to_string(i) + " out of range");
    return monomial(k, std::uint32_t(1) << (i - 1));
}

Elem Elem::monomial(std::uint32_t k, std::uint32_t subset_mask) {
    if (subset_mask >= (std::uint32_t(1) << k)) throw Error("monomial uses an index above k");
    Elem e = zero(k);
    e.coeffs.set(subset_mask, true);
    return e;
}

Elem add(const Elem& a, const Elem& b) {
    require_same_ring(a, b);
    Elem r = a;
    r.coeffs ^= b.coeffs;
    return r;
}

Elem mul(const Elem& a, const Elem& b) {
    require_same_ring(a, b);
    BitVec ea = crt_forward(a);
    ea &= crt_forward(b);
    return crt_inverse(a.k, ea);
}

BitVec crt_forward(const Elem& a) {
    BitVec v = a.coeffs;
    zeta_inplace(v, a.k);
    return v;
}

Elem crt_inverse(std::uint32_t k, const BitVec& values) {
    require_valid_k(k);
    if (values.size() != (std::size_t(1) << k)) throw Error("CRT vector has wrong length");
    BitVec v = values;
    zeta_inplace(v, k);
    return Elem(k, std::move(v));
}

Elem theta(const Elem& a, VarSet s) {
    if (s >= (std::uint32_t(1) << a.k)) throw Error("theta subset uses an index above k");
    // Substituting v_i + 1 for v_i folds the coefficient of B union {i}
    // into the coefficient of B, for every B not containing i.
    Elem r = a;
    const std::size_t n = std::size_t(1) << a.k;
    for (unsigned i = 0; i < a.k; ++i) {
        if (!((s >> i) & 1u)) continue;
        const std::size_t bit = std::size_t(1) << i;
        for (std::size_t m = 0; m < n; ++m)
            if (!(m & bit) && r.coeffs.get(m | bit)) r.coeffs.flip(m);
    }
    return r;
}

Automorphism Automorphism::theta_s(std::uint32_t k, VarSet s) {
    std::vector<std::uint8_t> tgt(k), flp(k);
    for (unsigned i = 0; i < k; ++i) {
        tgt[i] = std::uint8_t(i + 1);
        flp[i] = std::uint8_t((s >> i) & 1u);
    }
    return make(k, std::move(tgt), std::move(flp));
}

Automorphism Automorphism::make(std::uint32_t k, std::vector<std::uint8_t> target,
                                std::vector<std::uint8_t> flip) {
    require_valid_k(k);
    if (target.size() != k || flip.size() != k)
        throw Error("automorphism needs one target and one flip per generator");
    std::vector<bool> seen(k + 1, false);
    for (std::uint8_t t : target) {
        if (t < 1 || t > k || seen[t]) throw Error("automorphism target map is not a bijection");
        seen[t] = true;
    }
    Automorphism f;
    f.k = k;
    f.target = std::move(target);
    f.flip = std::move(flip);
    return f;
}

Elem apply(const Automorphism& f, const Elem& a) {
    if (f.k != a.k) throw Error("automorphism and element are over different k");
    // f permutes the evaluation points: the value of f(a) at point b is the
    // value of a at the point q with q_i = b_{target(i)} XOR flip(i).
    const BitVec vals = crt_forward(a);
    BitVec out(vals.size());
    for (std::uint32_t b = 0; b < vals.size(); ++b) {
        std::uint32_t q = 0;
        for (unsigned i = 0; i < f.k; ++i) {
            const std::uint32_t bit = (b >> (f.target[i] - 1)) & 1u;
            q |= (bit ^ f.flip[i]) << i;
        }
        if (vals.get(q)) out.set(b, true);
    }
    return crt_inverse(f.k, out);
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
    if (f.k != g.k) throw Error("automorphism composition across different k");
    // (f o g)(v_i) = f(v_{g.target[i]} + g.flip[i]) = v_{f.target[g.target[i]]}
    //                + f.flip[g.target[i]] + g.flip[i]
    std::vector<std::uint8_t> tgt(f.k), flp(f.k);
    for (unsigned i = 0; i < f.k; ++i) {
        const unsigned gi = g.target[i];
        tgt[i] = f.target[gi - 1];
        flp[i] = std::uint8_t(f.flip[gi - 1] ^ g.flip[i]);
    }
    return Automorphism::make(f.k, std::move(tgt), std::move(flp));
}

bool is_involution(const Automorphism& f) {
    const Automorphism ff = compose(f, f);
    for (unsigned i = 0; i < f.k; ++i)
        if (ff.target[i] != i + 1 || ff.flip[i] != 0) return false;
    return true;
}

InvolutionKind classify_involution(const Automorphism& f) {
    if (!is_involution(f)) return InvolutionKind::not_involution;
    for (unsigned i = 0; i < f.k; ++i)
        if (f.target[i] != i + 1) return InvolutionKind::paired_flip;
    return InvolutionKind::theta_subset;
}

Elem principal_generator(const std::vector<Elem>& gens) {
    if (gens.empty()) throw Error("principal_generator needs at least one element");
    BitVec acc = crt_forward(gens[0]);
    for (std::size_t i = 1; i < gens.size(); ++i) {
        if (gens[i].k != gens[0].k) throw Error("ring mismatch: elements over different k");
        acc |= crt_forward(gens[i]);
    }
    return crt_inverse(gens[0].k, acc);
}

std::vector<MaximalIdeal> maximal_ideals(std::uint32_t k) {
    require_valid_k(k);
    std::vector<MaximalIdeal> out;
    out.reserve(std::size_t(1) << k);
    for (std::uint32_t flips = 0; flips < (std::uint32_t(1) << k); ++flips) {
        MaximalIdeal m;
        m.k = k;
        m.flips = flips;
        // The kernel of evaluation at b = flips: everything vanishing there,
        // generated by the element that is 1 at every other point.
        BitVec vals(std::size_t(1) << k);
        for (std::uint32_t b = 0; b < vals.size(); ++b)
            if (b != flips) vals.set(b, true);
        m.generator = crt_inverse(k, vals);
        out.push_back(std::move(m));
    }
    return out;
}

std::string format_elem(const Elem& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::uint32_t m = 0; m < a.coeffs.size(); ++m) {
        if (!a.coeffs.get(m)) continue;
        if (!out.empty()) out += '+';
        if (m == 0) {
            out += '1';
        } else {
            for (unsigned i = 0; i < a.k; ++i)
                if ((m >> i) & 1u) out += "v" + std::to_string(i + 1);
        }
    }
    return out;
}

namespace {

// Shared cursor-based scanning used by the element and polynomial parsers.
struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    unsigned read_uint() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw Error("expected a number at position " + std::to_string(i) + " in '" + s + "'");
        unsigned v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + unsigned(s[i] - '0');
            if (v > 1000000) throw Error("number too large in '" + s + "'");
            ++i;
        }
        return v;
    }
};

// monomial := '1' | ('v' uint)+ with optional '*' separators
std::uint32_t parse_monomial(Cursor& c, std::uint32_t k) {
    if (c.eat('1')) return 0;
    std::uint32_t mask = 0;
    bool saw = false;
    for (;;) {
        if (c.peek() == 'v') {
            c.eat('v');
            const unsigned i = c.read_uint();
            if (i < 1 || i > k)
                throw Error("generator v" + std::to_string(i) + " is outside {1,...," +
                            std::to_string(k) + "}");
            mask |= std::uint32_t(1) << (i - 1);
            saw = true;
            c.eat('*');
        } else {
            break;
        }
    }
    if (!saw) throw Error("expected '1' or 'v<i>' at position " + std::to_string(c.i));
    return mask;
}

Elem parse_elem_cursor(Cursor& c, std::uint32_t k) {
    Elem e = Elem::zero(k);
    for (;;) {
        e.coeffs.flip(parse_monomial(c, k));
        if (!c.eat('+')) break;
    }
    return e;
}

}  // namespace

Elem parse_elem(std::uint32_t k, const std::string& text) {
    require_valid_k(k);
    Cursor c{text};
    if (c.done()) throw Error("empty ring element");
    if (c.peek() == '0') {
        c.eat('0');
        if (!c.done()) throw Error("unexpected input after '0' in '" + text + "'");
        return Elem::zero(k);
    }
    Elem e = parse_elem_cursor(c, k);
    if (!c.done()) throw Error("unexpected input at position " + std::to_string(c.i) + " in '" + text + "'");
    return e;
}

std::string format_word(const Word& w) {
    std::string out = "(";
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (j) out += ", ";
        out += format_elem(w[j]);
    }
    return out + ")";
}

VarSet parse_varset(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t == "empty" || t.empty() || t == "{}") return 0;
    if (!t.empty() && t.front() == '{' && t.back() == '}') t = t.substr(1, t.size() - 2);
    VarSet s = 0;
    std::size_t i = 0;
    while (i < t.size()) {
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            throw Error("bad index set '" + text + "'");
        unsigned v = 0;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
            v = v * 10 + unsigned(t[i++] - '0');
        if (v < 1 || v > kMaxVars) throw Error("index " + std::to_string(v) + " out of range in '" + text + "'");
        s |= VarSet(1) << (v - 1);
        if (i < t.size()) {
            if (t[i] != ',') throw Error("bad index set '" + text + "'");
            ++i;
        }
    }
    return s;
}

std::string format_varset(VarSet s) {
    return s == 0 ? std::string("{}") : "{" + format_varset_plain(s) + "}";
}

std::string format_varset_plain(VarSet s) {
    if (s == 0) return "empty";
    std::string out;
    for (unsigned i = 1; i <= kMaxVars; ++i)
        if (varset_contains(s, i)) {
            if (!out.empty()) out += ",";
            out += std::to_string(i);
        }
    return out;
}

}  // namespace akcodes
