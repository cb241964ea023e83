#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace goldbct {

/// An element of GF(2^n) in polynomial basis: bit i is the coefficient of y^i.
///
/// Elements do not remember which field they came from. Range checks against a
/// concrete field happen at the checked entry points (Field::element, parsing).
struct Element {
    std::uint32_t bits = 0;

    constexpr auto operator<=>(const Element&) const = default;
    [[nodiscard]] constexpr bool is_zero() const { return bits == 0; }
};

/// Field addition is coefficient-wise XOR and does not depend on the modulus.
constexpr Element operator+(Element a, Element b) { return Element{a.bits ^ b.bits}; }
constexpr Element& operator+=(Element& a, Element b) {
    a.bits ^= b.bits;
    return a;
}

/// GF(2^n) for 2 <= n <= 24, built from a primitive polynomial so that the
/// class of y generates the multiplicative group.
///
/// Immutable after construction. Multiplication goes through log/exp tables
/// when n <= 20 and through shift-and-reduce otherwise.
class Field {
public:
    static constexpr int kMinDegree = 2;
    static constexpr int kMaxDegree = 24;
    static constexpr int kLogTableMaxDegree = 20;

    /// Field with the built-in primitive polynomial for n.
    explicit Field(int n);
    /// Field with an explicit modulus; `poly` includes the leading y^n bit.
    /// Throws ConstructionError when poly is reducible or y is not primitive.
    Field(int n, std::uint32_t poly);

    /// Built-in polynomial for n (for n = 6 this is y^6+y^4+y^3+y+1).
    static std::uint32_t default_polynomial(int n);

    [[nodiscard]] int degree() const { return n_; }
    [[nodiscard]] std::uint32_t size() const { return q_; }
    [[nodiscard]] std::uint32_t polynomial() const { return poly_; }
    [[nodiscard]] bool has_log_table() const { return !log_.empty(); }

    [[nodiscard]] static constexpr Element zero() { return Element{0}; }
    [[nodiscard]] static constexpr Element one() { return Element{1}; }
    [[nodiscard]] static constexpr Element generator() { return Element{2}; }

    [[nodiscard]] bool contains(Element x) const { return x.bits < q_; }
    /// Checked conversion from a raw bit pattern.
    [[nodiscard]] Element element(std::uint32_t bits) const;
    /// Every element in ascending bit order.
    [[nodiscard]] std::vector<Element> elements() const;

    [[nodiscard]] Element add(Element a, Element b) const { return a + b; }
    [[nodiscard]] Element mul(Element a, Element b) const;
    [[nodiscard]] Element square(Element a) const { return mul(a, a); }
    /// Multiplicative inverse with inv(0) = 0.
    [[nodiscard]] Element inv(Element a) const;
    [[nodiscard]] Element div(Element a, Element b) const { return mul(a, inv(b)); }
    /// a^e; negative exponents go through inv, so 0^(-1) = 0. 0^0 = 1.
    [[nodiscard]] Element pow(Element a, std::int64_t e) const;
    /// g^i for any integer i.
    [[nodiscard]] Element exp(std::int64_t i) const;
    /// Discrete log base g in [0, 2^n - 2]. Requires x != 0.
    [[nodiscard]] std::uint32_t log(Element x) const;

    /// x^(2^i), i taken mod n.
    [[nodiscard]] Element frobenius(Element x, int i) const;
    /// Unique square root, x^(2^(n-1)).
    [[nodiscard]] Element sqrt(Element x) const { return frobenius(x, n_ - 1); }

    /// Absolute trace onto F_2.
    [[nodiscard]] int abs_trace(Element x) const {
        return __builtin_parity(x.bits & trace_mask_);
    }
    /// Bit mask t(a) with Tr(a*x) = parity(t(a) & x.bits) for every x.
    [[nodiscard]] std::uint32_t trace_functional(Element a) const;
    /// Relative trace onto F_{2^e}. Throws UsageError unless e divides n.
    [[nodiscard]] Element rel_trace(Element x, int e) const;
    /// x lies in the subfield F_{2^e} (e must divide n).
    [[nodiscard]] bool in_subfield(Element x, int e) const;

    /// u = g^(t(2^e+1)) for some t. Requires u != 0 and n/e even.
    [[nodiscard]] bool is_gold_residue(Element u, int e) const;
    /// Exponentiation route: u^((2^n-1)/(2^e+1)) == 1.
    [[nodiscard]] bool gold_residue_by_power(Element u, int e) const;
    /// Log-table route: log_g(u) divisible by 2^e+1. Requires a log table.
    [[nodiscard]] bool gold_residue_by_log(Element u, int e) const;

    /// Multiplicative order of a nonzero element.
    [[nodiscard]] std::uint32_t order_of(Element x) const;

    /// `0xHH` rendering, zero-padded to the field's hex width.
    [[nodiscard]] std::string format(Element x) const;
    /// Accepts `0`, `1`, `g`, `g^i` (i may be negative) or `0x...`.
    [[nodiscard]] Element parse(std::string_view text) const;

    /// {"n": int, "poly": "0xHEX", "generator": "g"}
    [[nodiscard]] std::string to_json() const;
    static Field from_json(std::string_view json);

    friend bool operator==(const Field& a, const Field& b) {
        return a.n_ == b.n_ && a.poly_ == b.poly_;
    }

private:
    [[nodiscard]] Element mul_slow(Element a, Element b) const;
    void require_divisor(int e) const;

    int n_ = 0;
    std::uint32_t q_ = 0;
    std::uint32_t poly_ = 0;
    std::uint32_t trace_mask_ = 0;
    std::array<std::uint32_t, kMaxDegree> basis_functionals_{};
    std::vector<std::uint32_t> exp_;  // length 2(q-1), so exp_[i+j] needs no reduction
    std::vector<std::uint32_t> log_;  // log_[0] unused
};

/// Parameters of the Gold exponent 2^k+1 over GF(2^n).
struct GoldParams {
    int n = 0;
    int k = 0;
    int e = 0;               // gcd(k, n)
    bool ratio_odd = true;   // n/e odd
    std::optional<int> m;    // n/2, present iff n/e even

    /// Throws UsageError unless 1 <= k < n and n is a supported degree.
    static GoldParams make(int n, int k);

    [[nodiscard]] std::uint64_t exponent() const { return (std::uint64_t{1} << k) + 1; }
    [[nodiscard]] int ratio() const { return n / e; }
};

/// `0x`-prefixed uppercase hex, zero-padded to `width` digits.
std::string hex_string(std::uint64_t v, int width = 0);
/// Field::format without a Field: the width depends only on n.
std::string format_element(int n, Element x);

/// gcd(2^k+1, 2^n-1) by the closed form: 1 if n/e odd, 2^e+1 if n/e even.
std::uint64_t gold_gcd(int k, int n);

/// Jacobi symbol (2/M) = (-1)^((M^2-1)/8) for odd M >= 1.
int jacobi_2(std::int64_t m);

/// d' with d*d' = 1 mod 2^n-1. Throws UsageError when x^d does not permute.
std::uint64_t inverse_exponent(std::uint64_t d, int n);

}  // namespace goldbct
