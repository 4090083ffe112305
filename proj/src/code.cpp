#include "akcodes/code.hpp"

#include <bit>

#include "akcodes/gray.hpp"
#include "akcodes/perm.hpp"
#include "akcodes/skew_poly.hpp"

namespace akcodes {

namespace {

void validate_shape(std::uint32_t k, std::size_t n) {
    require_valid_k(k);
    if (n == 0) throw Error("length must be positive");
}

// The idempotent e_b with eval_b(e_b) = 1 and eval at every other point 0.
Elem point_idempotent(std::uint32_t k, std::size_t b) {
    BitVec values(std::size_t{1} << k);
    values.set(b, true);
    return crt_inverse(k, values);
}

// Per-coordinate evaluation vectors of a word (coordinate j's entry holds
// eval_b(x_j) at bit b).
std::vector<BitVec> word_evals(const Word& x) {
    std::vector<BitVec> out;
    out.reserve(x.size());
    for (const auto& e : x) out.push_back(crt_forward(e));
    return out;
}

}  // namespace

BitVec crt_strand(const Word& x, std::size_t b) {
    BitVec out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        if (crt_forward(x[j]).get(b)) out.set(j, true);
    return out;
}

Code Code::span(std::uint32_t k, std::size_t n, std::vector<Word> generators) {
    validate_shape(k, n);
    if (generators.empty()) throw Error("empty generator list");
    const std::size_t points = std::size_t{1} << k;
    for (const auto& g : generators) {
        if (g.size() != n)
            throw Error("generator length " + std::to_string(g.size()) +
                        " differs from code length " + std::to_string(n));
        for (const auto& e : g)
            if (e.k != k) throw Error("generator level differs from code level");
    }
    Code c;
    c.k_ = k;
    c.n_ = n;
    std::vector<std::vector<BitVec>> evals;
    evals.reserve(generators.size());
    for (const auto& g : generators) evals.push_back(word_evals(g));
    c.components_.reserve(points);
    for (std::size_t b = 0; b < points; ++b) {
        std::vector<BitVec> rows;
        rows.reserve(generators.size());
        for (const auto& ev : evals) {
            BitVec row(n);
            for (std::size_t j = 0; j < n; ++j)
                if (ev[j].get(b)) row.set(j, true);
            rows.push_back(std::move(row));
        }
        c.components_.push_back(BinaryCode::span(n, rows));
    }
    c.generators_ = std::move(generators);
    return c;
}

Code Code::from_components(std::uint32_t k, std::size_t n, std::vector<BinaryCode> components) {
    validate_shape(k, n);
    const std::size_t points = std::size_t{1} << k;
    if (components.size() != points)
        throw Error("expected " + std::to_string(points) + " components, got " +
                    std::to_string(components.size()));
    for (const auto& d : components)
        if (d.length() != n) throw Error("component length differs from code length");
    Code c;
    c.k_ = k;
    c.n_ = n;
    c.components_ = std::move(components);
    for (std::size_t b = 0; b < points; ++b) {
        const Elem eb = point_idempotent(k, b);
        for (const auto& row : c.components_[b].basis()) {
            Word w(n, Elem::zero(k));
            for (std::size_t j = 0; j < n; ++j)
                if (row.get(j)) w[j] = eb;
            c.generators_.push_back(std::move(w));
        }
    }
    return c;
}

const BinaryCode& Code::component(std::size_t b) const {
    if (b >= components_.size()) throw Error("component index out of range");
    return components_[b];
}

bool Code::contains(const Word& x) const {
    if (x.size() != n_) throw Error("word length differs from code length");
    for (const auto& e : x)
        if (e.k != k_) throw Error("word level differs from code level");
    const std::vector<BitVec> evals = word_evals(x);
    for (std::size_t b = 0; b < components_.size(); ++b) {
        BitVec strand(n_);
        for (std::size_t j = 0; j < n_; ++j)
            if (evals[j].get(b)) strand.set(j, true);
        if (!components_[b].contains(strand)) return false;
    }
    return true;
}

unsigned long long Code::log2_size() const {
    unsigned long long total = 0;
    for (const auto& d : components_) total += d.dim();
    return total;
}

std::string Code::cardinality() const { return "2^" + std::to_string(log2_size()); }

std::vector<Word> Code::f2_basis() const {
    std::vector<Word> out;
    for (std::size_t b = 0; b < components_.size(); ++b) {
        const Elem eb = point_idempotent(k_, b);
        for (const auto& row : components_[b].basis()) {
            Word w(n_, Elem::zero(k_));
            for (std::size_t j = 0; j < n_; ++j)
                if (row.get(j)) w[j] = eb;
            out.push_back(std::move(w));
        }
    }
    return out;
}

bool is_theta_cyclic(const Code& c, VarSet S) {
    for (const auto& w : c.f2_basis())
        if (!c.contains(theta_shift(w, S))) return false;
    return true;
}

BinaryCode gray_image(const Code& c) {
    const std::size_t len = c.n() << c.k();
    std::vector<BitVec> rows;
    for (const auto& w : c.f2_basis()) rows.push_back(phi_word(w));
    return BinaryCode::span(len, rows);
}

bool is_quasi_cyclic(const BinaryCode& b, std::size_t ell) {
    if (ell == 0 || b.length() % ell != 0)
        throw Error("quasi-cyclic index " + std::to_string(ell) + " does not divide length " +
                    std::to_string(b.length()));
    return b.closed_under_shift(ell);
}

CharacterizationReport check_characterization_1(const Code& c, VarSet S) {
    if (S >= (std::uint32_t{1} << c.k()))
        throw Error("variable set " + format_varset(S) + " exceeds k = " + std::to_string(c.k()));
    CharacterizationReport rep;
    const BinaryCode gray = gray_image(c);
    const IndexPerm sig = big_sigma_S(S, c.n(), c.k());

    rep.sigma_fixes_gray = true;
    for (const auto& row : gray.basis())
        if (!gray.contains(sig.apply(row))) {
            rep.sigma_fixes_gray = false;
            break;
        }

    if (c.n() % 2 == 1) {
        if (S == 0) {
            rep.quasi_index = std::size_t{1} << c.k();
            rep.conjugated_quasi_cyclic = is_quasi_cyclic(gray, rep.quasi_index);
            rep.note =
                "S empty with odd length: no conjugating permutation exists (the twisted "
                "shift has order n, the plain shift 2n); the Gray image itself is tested "
                "for 2^k-quasi-cyclicity";
        } else {
            rep.quasi_index = std::size_t{1} << (c.k() - 1);
            const BinaryCode moved = sigma_S1(S, c.n(), c.k()).apply(gray);
            rep.conjugated_quasi_cyclic = is_quasi_cyclic(moved, rep.quasi_index);
        }
    } else {
        rep.quasi_index = std::size_t{1} << c.k();
        const BinaryCode moved = sigma_S2(S, c.n(), c.k()).apply(gray);
        rep.conjugated_quasi_cyclic = is_quasi_cyclic(moved, rep.quasi_index);
    }

    rep.theta_cyclic = is_theta_cyclic(c, S);
    return rep;
}

Code dual(const Code& c, VarSet T) {
    if (T >= (std::uint32_t{1} << c.k()))
        throw Error("variable set " + format_varset(T) + " exceeds k = " + std::to_string(c.k()));
    const std::size_t points = std::size_t{1} << c.k();
    std::vector<BinaryCode> comps;
    comps.reserve(points);
    for (std::size_t b = 0; b < points; ++b) comps.push_back(c.component(b ^ T).dual());
    return Code::from_components(c.k(), c.n(), std::move(comps));
}

bool is_self_dual(const Code& c, VarSet T) { return c == dual(c, T); }

std::pair<bool, bool> self_dual_component_readings(const Code& c, VarSet T) {
    if (T >= (std::uint32_t{1} << c.k()))
        throw Error("variable set " + format_varset(T) + " exceeds k = " + std::to_string(c.k()));
    const std::size_t points = std::size_t{1} << c.k();
    bool dualized = true, printed = true;
    for (std::size_t b = 0; b < points; ++b) {
        if (!(c.component(b) == c.component(b ^ T).dual())) dualized = false;
        if (!(c.component(b) == c.component(b ^ T))) printed = false;
    }
    return {dualized, printed};
}

DistanceResult min_distance_components(const Code& c, unsigned dim_cap) {
    if (c.is_zero()) throw Error("the zero code has no minimum distance");
    unsigned best = 0;
    bool have = false;
    for (const auto& d : c.components()) {
        if (d.dim() == 0) continue;
        std::string reason;
        const auto cd = d.min_distance(dim_cap, &reason);
        if (!cd) return {std::nullopt, "component distance out of cap: " + reason};
        if (!have || *cd < best) {
            best = *cd;
            have = true;
        }
    }
    return {best, ""};
}

DistanceResult min_distance_brute(const Code& c, unsigned log_cap) {
    if (c.is_zero()) throw Error("the zero code has no minimum distance");
    const unsigned long long L = c.log2_size();
    if (L > log_cap)
        return {std::nullopt, "code has 2^" + std::to_string(L) +
                                  " words, beyond the enumeration cap 2^" +
                                  std::to_string(log_cap)};
    const std::size_t blk = std::size_t{1} << c.k();
    std::vector<BitVec> flat;
    for (const auto& w : c.f2_basis()) {
        BitVec bits(c.n() * blk);
        for (std::size_t j = 0; j < w.size(); ++j) {
            const BitVec ev = crt_forward(w[j]);
            for (std::size_t b = 0; b < blk; ++b)
                if (ev.get(b)) bits.set(j * blk + b, true);
        }
        flat.push_back(std::move(bits));
    }
    unsigned best = 0;
    bool have = false;
    BitVec cur(c.n() * blk);
    const unsigned long long total = 1ull << L;
    for (unsigned long long i = 1; i < total; ++i) {
        cur ^= flat[static_cast<std::size_t>(std::countr_zero(i))];
        unsigned wt = 0;
        for (std::size_t j = 0; j < c.n(); ++j) {
            for (std::size_t b = 0; b < blk; ++b) {
                if (cur.get(j * blk + b)) {
                    ++wt;
                    break;
                }
            }
        }
        if (wt != 0 && (!have || wt < best)) {
            best = wt;
            have = true;
        }
    }
    return {best, ""};
}

DistanceResult gray_min_distance(const Code& c, unsigned dim_cap) {
    if (c.is_zero()) throw Error("the zero code has no minimum distance");
    std::string reason;
    const auto d = gray_image(c).min_distance(dim_cap, &reason);
    if (!d) return {std::nullopt, "Gray image distance out of cap: " + reason};
    return {*d, ""};
}

std::vector<Code> psi_decompose(const Code& c, std::uint32_t p) {
    if (p > c.k()) throw Error("psi_decompose requires p <= k");
    const std::size_t s = std::size_t{1} << (c.k() - p);
    const std::size_t low = std::size_t{1} << p;
    std::vector<Code> out;
    out.reserve(s);
    for (std::size_t hi = 0; hi < s; ++hi) {
        std::vector<BinaryCode> comps;
        comps.reserve(low);
        for (std::size_t b = 0; b < low; ++b) comps.push_back(c.component(b | (hi << p)));
        out.push_back(Code::from_components(p, c.n(), std::move(comps)));
    }
    return out;
}

Code psi_compose(std::uint32_t k, const std::vector<Code>& slots) {
    require_valid_k(k);
    if (slots.empty()) throw Error("psi_compose requires at least one slot code");
    const std::uint32_t p = slots[0].k();
    if (p > k || slots.size() != (std::size_t{1} << (k - p)))
        throw Error("expected " + std::to_string(std::size_t{1} << (k - p)) +
                    " slot codes at level p = " + std::to_string(p) + ", got " +
                    std::to_string(slots.size()));
    const std::size_t n = slots[0].n();
    const std::size_t low = std::size_t{1} << p;
    std::vector<BinaryCode> comps(std::size_t{1} << k, BinaryCode(n));
    for (std::size_t hi = 0; hi < slots.size(); ++hi) {
        if (slots[hi].k() != p) throw Error("slot codes have mixed levels");
        if (slots[hi].n() != n) throw Error("slot codes have mixed lengths");
        for (std::size_t b = 0; b < low; ++b) comps[b | (hi << p)] = slots[hi].component(b);
    }
    return Code::from_components(k, n, std::move(comps));
}

}  // namespace akcodes
