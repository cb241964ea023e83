#pragma once

// Reference implementations used only by the tests. They share nothing with
// the library beyond the bit layout of elements: multiplication is schoolbook
// carry-less product plus reduction, and every count is a direct search.

#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

struct NaiveField {
    int n;
    std::uint32_t poly;  // includes the y^n bit

    [[nodiscard]] std::uint32_t q() const { return std::uint32_t{1} << n; }

    [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t acc = 0;
        for (int i = 0; i < n; ++i)
            if ((b >> i) & 1u) acc ^= std::uint64_t{a} << i;
        for (int i = 2 * n - 2; i >= n; --i)
            if ((acc >> i) & 1u) acc ^= std::uint64_t{poly} << (i - n);
        return static_cast<std::uint32_t>(acc);
    }

    [[nodiscard]] std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }

    // x^(2^i) by repeated squaring
    [[nodiscard]] std::uint32_t frob(std::uint32_t x, int i) const {
        for (int j = 0; j < i; ++j) x = mul(x, x);
        return x;
    }

    [[nodiscard]] std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) return 0;
        for (std::uint32_t b = 1; b < q(); ++b)
            if (mul(a, b) == 1) return b;
        return 0;
    }

    // Tr_e(x) = sum_{i < n/e} x^(2^(e i))
    [[nodiscard]] std::uint32_t rel_trace(std::uint32_t x, int e) const {
        std::uint32_t t = 0, y = x;
        for (int i = 0; i < n / e; ++i) {
            t ^= y;
            y = frob(y, e);
        }
        return t;
    }
    [[nodiscard]] int trace(std::uint32_t x) const { return static_cast<int>(rel_trace(x, 1)); }
    [[nodiscard]] int chi(std::uint32_t x) const { return trace(x) ? -1 : 1; }

    // power map table x -> x^d, by repeated multiplication of the previous power
    [[nodiscard]] std::vector<std::uint32_t> power_table(std::uint64_t d) const {
        std::vector<std::uint32_t> t(q());
        for (std::uint32_t x = 0; x < q(); ++x) {
            std::uint32_t r = 1;
            for (std::uint64_t i = 0; i < d; ++i) r = mul(r, x);
            t[x] = x == 0 ? 0 : r;
        }
        return t;
    }
};

inline std::int64_t weil(const NaiveField& f, std::uint32_t u, std::uint32_t v, int k) {
    std::int64_t s = 0;
    for (std::uint32_t x = 0; x < f.q(); ++x) s += f.chi(f.mul(u, f.mul(f.frob(x, k), x)) ^ f.mul(v, x));
    return s;
}

// Number of (x, y) with F(x) + cF(y) = b and F(x+a) + c^-1 F(y+a) = b.
inline std::uint64_t cbct(const NaiveField& f, const std::vector<std::uint32_t>& F, std::uint32_t c,
                          std::uint32_t a, std::uint32_t b) {
    const std::uint32_t ci = f.inv(c);
    std::uint64_t count = 0;
    for (std::uint32_t x = 0; x < f.q(); ++x)
        for (std::uint32_t y = 0; y < f.q(); ++y)
            if ((F[x] ^ f.mul(c, F[y])) == b && (F[x ^ a] ^ f.mul(ci, F[y ^ a])) == b) ++count;
    return count;
}

// All b at once: bucket the pairs solving the first equation by b.
inline std::vector<std::uint64_t> cbct_row(const NaiveField& f, const std::vector<std::uint32_t>& F,
                                           std::uint32_t c, std::uint32_t a) {
    const std::uint32_t ci = f.inv(c);
    std::vector<std::uint64_t> row(f.q(), 0);
    for (std::uint32_t x = 0; x < f.q(); ++x)
        for (std::uint32_t y = 0; y < f.q(); ++y) {
            const std::uint32_t b = F[x] ^ f.mul(c, F[y]);
            if ((F[x ^ a] ^ f.mul(ci, F[y ^ a])) == b) ++row[b];
        }
    return row;
}

// Number of x with F(x + a) + cF(x) = b.
inline std::uint64_t cddt(const NaiveField& f, const std::vector<std::uint32_t>& F, std::uint32_t c,
                          std::uint32_t a, std::uint32_t b) {
    std::uint64_t count = 0;
    for (std::uint32_t x = 0; x < f.q(); ++x)
        if ((F[x ^ a] ^ f.mul(c, F[x])) == b) ++count;
    return count;
}

inline std::vector<std::uint64_t> sorted_set(const std::vector<std::uint64_t>& values) {
    const std::set<std::uint64_t> s(values.begin(), values.end());
    return {s.begin(), s.end()};
}

// Kernel size of x -> u^(2^k) x^(2^(2k)) + u x by enumeration.
inline std::uint64_t lu_kernel(const NaiveField& f, std::uint32_t u, int k) {
    std::uint64_t count = 0;
    for (std::uint32_t x = 0; x < f.q(); ++x)
        if ((f.mul(f.frob(u, k), f.frob(x, 2 * k)) ^ f.mul(u, x)) == 0) ++count;
    return count;
}

}  // namespace oracle
