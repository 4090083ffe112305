#include "akcodes/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "akcodes/ring.hpp"

namespace akcodes {

namespace {

// XOR by a fixed mask on 0-based points {0, ..., 2^k - 1}.
IndexPerm xor_perm(std::uint32_t mask, std::uint32_t k) {
    const std::size_t m = std::size_t{1} << k;
    std::vector<std::size_t> img(m);
    for (std::size_t q = 0; q < m; ++q) img[q] = (q ^ mask) + 1;
    return IndexPerm::from_images(img);
}

}  // namespace

IndexPerm::IndexPerm(std::size_t size) {
    img_.resize(size);
    std::iota(img_.begin(), img_.end(), std::size_t{0});
}

IndexPerm IndexPerm::from_images(const std::vector<std::size_t>& images1) {
    IndexPerm p;
    p.img_.resize(images1.size());
    std::vector<bool> seen(images1.size(), false);
    for (std::size_t j = 0; j < images1.size(); ++j) {
        const std::size_t v = images1[j];
        if (v < 1 || v > images1.size())
            throw Error("permutation image out of range: " + std::to_string(v));
        if (seen[v - 1])
            throw Error("permutation image repeated: " + std::to_string(v));
        seen[v - 1] = true;
        p.img_[j] = v - 1;
    }
    return p;
}

std::size_t IndexPerm::map(std::size_t j) const {
    if (j < 1 || j > img_.size()) throw Error("permutation index out of range");
    return img_[j - 1] + 1;
}

std::size_t IndexPerm::map0(std::size_t j) const {
    if (j >= img_.size()) throw Error("permutation index out of range");
    return img_[j];
}

bool IndexPerm::is_identity() const {
    for (std::size_t j = 0; j < img_.size(); ++j)
        if (img_[j] != j) return false;
    return true;
}

IndexPerm IndexPerm::inverse() const {
    IndexPerm p;
    p.img_.resize(img_.size());
    for (std::size_t j = 0; j < img_.size(); ++j) p.img_[img_[j]] = j;
    return p;
}

IndexPerm IndexPerm::then(const IndexPerm& q) const {
    if (q.img_.size() != img_.size()) throw Error("permutation size mismatch");
    IndexPerm r;
    r.img_.resize(img_.size());
    for (std::size_t j = 0; j < img_.size(); ++j) r.img_[j] = img_[q.img_[j]];
    return r;
}

IndexPerm IndexPerm::power(long long e) const {
    IndexPerm base = *this;
    if (e < 0) {
        base = inverse();
        e = -e;
    }
    IndexPerm acc(img_.size());
    while (e > 0) {
        if (e & 1) acc = acc.then(base);
        base = base.then(base);
        e >>= 1;
    }
    return acc;
}

unsigned long long IndexPerm::order() const {
    unsigned long long ord = 1;
    for (const auto& len : cycle_lengths())
        ord = std::lcm(ord, static_cast<unsigned long long>(len));
    return ord;
}

std::vector<std::vector<std::size_t>> IndexPerm::cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t start = 0; start < img_.size(); ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> cyc;
        std::size_t cur = start;
        do {
            seen[cur] = true;
            cyc.push_back(cur + 1);
            cur = img_[cur];
        } while (cur != start);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<std::size_t> IndexPerm::cycle_lengths() const {
    std::vector<std::size_t> lens;
    for (const auto& c : cycles()) lens.push_back(c.size());
    std::sort(lens.begin(), lens.end(), std::greater<>());
    return lens;
}

std::string IndexPerm::cycle_string() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles()) {
        if (c.size() == 1) continue;
        any = true;
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << c[i];
        }
        os << ')';
    }
    if (!any) return "id";
    return os.str();
}

BitVec IndexPerm::apply(const BitVec& x) const {
    if (x.size() != img_.size()) throw Error("permutation size mismatch");
    BitVec out(x.size());
    for (std::size_t j = 0; j < img_.size(); ++j)
        if (x.get(img_[j])) out.set(j, true);
    return out;
}

BinaryCode IndexPerm::apply(const BinaryCode& c) const {
    std::vector<BitVec> rows;
    rows.reserve(c.basis().size());
    for (const auto& r : c.basis()) rows.push_back(apply(r));
    return BinaryCode::span(c.length(), rows);
}

IndexPerm sigma_ik(unsigned i, std::uint32_t k) {
    require_valid_k(k);
    if (i < 1 || i > k)
        throw Error("sigma_{i,k} requires 1 <= i <= k, got i = " + std::to_string(i));
    return xor_perm(std::uint32_t{1} << (i - 1), k);
}

IndexPerm sigma_Sk(VarSet S, std::uint32_t k) {
    require_valid_k(k);
    if (S >= (std::uint32_t{1} << k))
        throw Error("variable set " + format_varset(S) + " exceeds k = " + std::to_string(k));
    return xor_perm(S, k);
}

IndexPerm big_sigma_S(VarSet S, std::size_t n, std::uint32_t k) {
    require_valid_k(k);
    if (n == 0) throw Error("length must be positive");
    if (S >= (std::uint32_t{1} << k))
        throw Error("variable set " + format_varset(S) + " exceeds k = " + std::to_string(k));
    const std::size_t blk = std::size_t{1} << k;
    std::vector<std::size_t> img(n * blk);
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t ap = (a + n - 1) % n;
        for (std::size_t b = 0; b < blk; ++b)
            img[a * blk + b] = ap * blk + (b ^ S) + 1;
    }
    return IndexPerm::from_images(img);
}

unsigned long long ord_sigma_S(VarSet S, std::size_t n, std::uint32_t k) {
    return big_sigma_S(S, n, k).order();
}

IndexPerm sigma_S1(VarSet S, std::size_t n, std::uint32_t k) {
    require_valid_k(k);
    if (n == 0 || n % 2 == 0)
        throw Error("sigma_S1 is defined for odd n only; use sigma_S2 for even n");
    if (S == 0)
        throw Error(
            "sigma_S1 requires a nonempty variable set: Sigma_{} has order n while the "
            "target shift has order 2n, so no conjugating permutation exists");
    if (S >= (std::uint32_t{1} << k))
        throw Error("variable set " + format_varset(S) + " exceeds k = " + std::to_string(k));
    const std::size_t blk = std::size_t{1} << k;
    const std::size_t half = blk >> 1;
    const std::size_t total = n * blk;

    // One representative per pair {q, q XOR mask(S)}: the smaller element,
    // listed in increasing order.
    std::vector<std::size_t> reps;
    reps.reserve(half);
    for (std::size_t q = 0; q < blk; ++q)
        if (q < (q ^ S)) reps.push_back(q);

    const IndexPerm sig = big_sigma_S(S, n, k);
    std::vector<std::size_t> img(total);
    for (std::size_t r = 0; r < half; ++r) {
        // orbit[m] = sigma_S^m(reps[r]) as a 0-based point walk.
        std::size_t cur = reps[r];
        std::vector<std::size_t> orbit(2 * n);
        for (std::size_t m = 0; m < 2 * n; ++m) {
            orbit[m] = cur;
            cur = sig.map0(cur);
        }
        for (std::size_t a = 0; a < 2 * n; ++a)
            img[a * half + r] = orbit[2 * n - 1 - a] + 1;
    }
    return IndexPerm::from_images(img);
}

IndexPerm sigma_S2(VarSet S, std::size_t n, std::uint32_t k) {
    require_valid_k(k);
    if (n == 0 || n % 2 != 0)
        throw Error("sigma_S2 is defined for even n only; use sigma_S1 for odd n");
    if (S >= (std::uint32_t{1} << k))
        throw Error("variable set " + format_varset(S) + " exceeds k = " + std::to_string(k));
    const std::size_t blk = std::size_t{1} << k;
    const std::size_t total = n * blk;
    const IndexPerm sig = big_sigma_S(S, n, k);
    std::vector<std::size_t> img(total);
    for (std::size_t r = 0; r < blk; ++r) {
        std::size_t cur = r;
        std::vector<std::size_t> orbit(n);
        for (std::size_t m = 0; m < n; ++m) {
            orbit[m] = cur;
            cur = sig.map0(cur);
        }
        for (std::size_t a = 0; a < n; ++a)
            img[a * blk + r] = orbit[n - 1 - a] + 1;
    }
    return IndexPerm::from_images(img);
}

IndexPerm shift_perm(std::size_t n, std::size_t ell) {
    if (n == 0) throw Error("length must be positive");
    std::vector<std::size_t> img(n);
    for (std::size_t j = 0; j < n; ++j) img[j] = (j + n - (ell % n)) % n + 1;
    return IndexPerm::from_images(img);
}

}  // namespace akcodes
