#include "akcodes/skew_poly.hpp"

#include <bit>
#include <cctype>
#include <sstream>

namespace akcodes {

namespace {

void validate_twist(std::uint32_t k, VarSet S) {
    require_valid_k(k);
    if (S >= (std::uint32_t{1} << k))
        throw Error("variable set " + format_varset(S) + " exceeds k = " + std::to_string(k));
}

void trim(std::vector<Elem>& coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

}  // namespace

SkewPoly SkewPoly::zero(std::uint32_t k, VarSet S) {
    validate_twist(k, S);
    SkewPoly f;
    f.k = k;
    f.S = S;
    return f;
}

SkewPoly SkewPoly::make(std::uint32_t k, VarSet S, std::vector<Elem> coeffs) {
    validate_twist(k, S);
    for (const auto& c : coeffs)
        if (c.k != k) throw Error("coefficient level differs from polynomial level");
    SkewPoly f;
    f.k = k;
    f.S = S;
    f.coeffs = std::move(coeffs);
    trim(f.coeffs);
    return f;
}

Elem SkewPoly::coeff(std::size_t d) const {
    if (d < coeffs.size()) return coeffs[d];
    return Elem::zero(k);
}

SkewPoly skew_add(const SkewPoly& a, const SkewPoly& b) {
    if (a.k != b.k || a.S != b.S)
        throw Error("skew polynomials live in different rings");
    std::vector<Elem> out;
    const std::size_t len = std::max(a.coeffs.size(), b.coeffs.size());
    out.reserve(len);
    for (std::size_t d = 0; d < len; ++d) out.push_back(add(a.coeff(d), b.coeff(d)));
    return SkewPoly::make(a.k, a.S, std::move(out));
}

SkewPoly skew_mul(const SkewPoly& a, const SkewPoly& b) {
    if (a.k != b.k || a.S != b.S)
        throw Error("skew polynomials live in different rings");
    if (a.is_zero() || b.is_zero()) return SkewPoly::zero(a.k, a.S);
    std::vector<Elem> out(a.coeffs.size() + b.coeffs.size() - 1, Elem::zero(a.k));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            // Theta_S is an involution, so Theta_S^i is Theta_S for odd i.
            const Elem tb = (i % 2 == 1) ? theta(b.coeffs[j], a.S) : b.coeffs[j];
            out[i + j] = add(out[i + j], mul(a.coeffs[i], tb));
        }
    }
    return SkewPoly::make(a.k, a.S, std::move(out));
}

Word mod_xn_minus_1(const SkewPoly& f, std::size_t n) {
    if (n == 0) throw Error("length must be positive");
    Word out(n, Elem::zero(f.k));
    for (std::size_t d = 0; d < f.coeffs.size(); ++d)
        out[d % n] = add(out[d % n], f.coeffs[d]);
    return out;
}

Word theta_shift(const Word& c, VarSet S) {
    if (c.empty()) throw Error("empty word");
    Word out;
    out.reserve(c.size());
    out.push_back(theta(c.back(), S));
    for (std::size_t j = 0; j + 1 < c.size(); ++j) out.push_back(theta(c[j], S));
    return out;
}

std::vector<Word> span_generators(const std::vector<SkewPoly>& gens, std::size_t n,
                                  unsigned step) {
    if (gens.empty()) throw Error("empty generator list");
    if (step != 1 && step != 2) throw Error("closure step must be 1 or 2");
    std::vector<Word> out;
    out.reserve(2 * n * gens.size() / step);
    for (const auto& g : gens) {
        if (g.k != gens[0].k || g.S != gens[0].S)
            throw Error("skew polynomials live in different rings");
        Word w = mod_xn_minus_1(g, n);
        for (std::size_t i = 0; i < 2 * n; i += step) {
            out.push_back(w);
            for (unsigned s = 0; s < step; ++s) w = theta_shift(w, g.S);
        }
    }
    return out;
}

bool skew_ring_isomorphic(std::uint32_t k, VarSet S1, VarSet S2) {
    validate_twist(k, S1);
    validate_twist(k, S2);
    return std::popcount(S1) == std::popcount(S2);
}

unsigned long long count_isomorphic(std::uint32_t k, VarSet S) {
    validate_twist(k, S);
    const unsigned r = static_cast<unsigned>(std::popcount(S));
    unsigned long long c = 1;
    for (unsigned i = 0; i < r; ++i) c = c * (k - i) / (i + 1);
    return c;
}

namespace {

// Shared cursor over the polynomial text (whitespace-insensitive).
struct PolyCursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    unsigned long read_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw Error("expected a number at position " + std::to_string(pos) + " in \"" + s +
                        "\"");
        unsigned long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<unsigned long>(s[pos] - '0');
            if (v > 1000000) throw Error("number too large in \"" + s + "\"");
            ++pos;
        }
        return v;
    }
};

// vprod := 'v' uint ('*'? 'v' uint)* ; returns the monomial's variable set.
VarSet parse_vprod(PolyCursor& cur, std::uint32_t k) {
    VarSet B = 0;
    while (true) {
        if (!cur.eat('v')) break;
        const unsigned long i = cur.read_uint();
        if (i < 1 || i > k)
            throw Error("variable v" + std::to_string(i) + " outside {v1,...,v" +
                        std::to_string(k) + "}");
        B |= VarSet{1} << (i - 1);
        cur.eat('*');
    }
    return B;
}

// vterm := '1' | vprod ; adds the monomial into e.
void parse_vterm(PolyCursor& cur, Elem& e) {
    if (cur.peek() == 'v') {
        const VarSet B = parse_vprod(cur, e.k);
        e.coeffs.flip(B);
        return;
    }
    if (cur.eat('1')) {
        e.coeffs.flip(0);
        return;
    }
    throw Error("expected '1' or a variable product at position " + std::to_string(cur.pos) +
                " in \"" + cur.s + "\"");
}

// coef := '1' | vprod | '(' vsum ')' ; empty optional in term handled by caller.
Elem parse_coef(PolyCursor& cur, std::uint32_t k) {
    Elem e = Elem::zero(k);
    if (cur.eat('(')) {
        parse_vterm(cur, e);
        while (cur.eat('+')) parse_vterm(cur, e);
        if (!cur.eat(')')) throw Error("missing ')' in \"" + cur.s + "\"");
        return e;
    }
    parse_vterm(cur, e);
    return e;
}

}  // namespace

SkewPoly parse_poly(std::uint32_t k, VarSet S, const std::string& text) {
    validate_twist(k, S);
    PolyCursor cur{text};
    // The zero polynomial is written as a sole "0" (as format_poly prints it).
    if (cur.peek() == '0') {
        ++cur.pos;
        if (!cur.done())
            throw Error("unexpected input after \"0\" at position " + std::to_string(cur.pos) +
                        " in \"" + text + "\"");
        return SkewPoly::zero(k, S);
    }
    std::vector<Elem> coeffs;
    bool first = true;
    while (true) {
        if (!first && !cur.eat('+')) break;
        first = false;
        // term := coef? mono? with at least one present
        Elem c = Elem::zero(k);
        bool have_coef = false;
        const char p = cur.peek();
        if (p == '1' || p == 'v' || p == '(') {
            c = parse_coef(cur, k);
            have_coef = true;
        }
        unsigned long deg = 0;
        bool have_mono = false;
        if (cur.eat('x')) {
            have_mono = true;
            deg = cur.eat('^') ? cur.read_uint() : 1;
        }
        if (!have_coef && !have_mono)
            throw Error("expected a term at position " + std::to_string(cur.pos) + " in \"" +
                        text + "\"");
        if (!have_coef) c = Elem::one(k);
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Elem::zero(k));
        coeffs[deg] = add(coeffs[deg], c);
    }
    if (!cur.done())
        throw Error("unexpected input at position " + std::to_string(cur.pos) + " in \"" + text +
                    "\"");
    return SkewPoly::make(k, S, std::move(coeffs));
}

std::string format_poly(const SkewPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = f.coeffs.size(); d-- > 0;) {
        const Elem& c = f.coeffs[d];
        if (c.is_zero()) continue;
        if (!first) os << '+';
        first = false;
        const std::string cs = format_elem(c);
        const bool multi_term = cs.find('+') != std::string::npos;
        if (d == 0) {
            os << (multi_term ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs != "1") os << (multi_term ? "(" + cs + ")" : cs);
        os << 'x';
        if (d > 1) os << '^' << d;
    }
    return os.str();
}

SkewPoly word_to_poly(VarSet S, const Word& c) {
    if (c.empty()) throw Error("empty word");
    return SkewPoly::make(c[0].k, S, c);
}

}  // namespace akcodes
