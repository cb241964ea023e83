#include "goldbct/field.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "goldbct/errors.hpp"

namespace goldbct {
namespace {

// Primitive polynomials over F_2, leading bit included. Entries are
// validated at construction like any user-supplied modulus.
constexpr std::array<std::uint32_t, Field::kMaxDegree + 1> kDefaultPolys = {
    0,          0,
    0x7,        // y^2+y+1
    0xB,        // y^3+y+1
    0x13,       // y^4+y+1
    0x25,       // y^5+y^2+1
    0x5B,       // y^6+y^4+y^3+y+1
    0x83,       // y^7+y+1
    0x11D,      // y^8+y^4+y^3+y^2+1
    0x211,      // y^9+y^4+1
    0x409,      // y^10+y^3+1
    0x805,      // y^11+y^2+1
    0x1053,     // y^12+y^6+y^4+y+1
    0x201B,     // y^13+y^4+y^3+y+1
    0x4443,     // y^14+y^10+y^6+y+1
    0x8003,     // y^15+y+1
    0x1100B,    // y^16+y^12+y^3+y+1
    0x20009,    // y^17+y^3+1
    0x40081,    // y^18+y^7+1
    0x80027,    // y^19+y^5+y^2+y+1
    0x100009,   // y^20+y^3+1
    0x200005,   // y^21+y^2+1
    0x400003,   // y^22+y+1
    0x800021,   // y^23+y^5+1
    0x1000087,  // y^24+y^7+y^2+y+1
};

int poly_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
    const int dm = poly_degree(m);
    for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
    return a;
}

std::string hex(std::uint64_t v, int width = 0) {
    std::ostringstream os;
    os << "0x" << std::uppercase << std::hex << std::setfill('0') << std::setw(width) << v;
    return os.str();
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        if (v % p != 0) continue;
        out.push_back(p);
        while (v % p == 0) v /= p;
    }
    if (v > 1) out.push_back(v);
    return out;
}

}  // namespace

std::uint32_t Field::default_polynomial(int n) {
    if (n < kMinDegree || n > kMaxDegree)
        throw UsageError("field degree " + std::to_string(n) + " outside [2, 24]");
    return kDefaultPolys[static_cast<std::size_t>(n)];
}

Field::Field(int n) : Field(n, default_polynomial(n)) {}

Field::Field(int n, std::uint32_t poly) : n_(n), q_(0), poly_(poly) {
    if (n < kMinDegree || n > kMaxDegree)
        throw UsageError("field degree " + std::to_string(n) + " outside [2, 24]");
    if (poly_degree(poly) != n)
        throw UsageError("polynomial " + hex(poly) + " does not have degree " + std::to_string(n));
    q_ = std::uint32_t{1} << n;

    // Any factorization has a factor of degree <= n/2.
    for (std::uint64_t f = 2; poly_degree(f) <= n / 2; ++f) {
        if (poly_mod(poly, f) == 0)
            throw ConstructionError("polynomial " + hex(poly) + " is reducible: divisible by " +
                                    hex(f));
    }

    const std::uint32_t group = q_ - 1;
    std::uint32_t ord = group;
    for (std::uint64_t p : prime_factors(group)) {
        while (ord % p == 0 && pow(generator(), ord / p) == one()) ord /= static_cast<std::uint32_t>(p);
    }
    if (ord != group)
        throw ConstructionError("class of y modulo " + hex(poly) + " has order " +
                                std::to_string(ord) + ", not " + std::to_string(group));

    // Tr(y^i) for each basis vector; Tr is F_2-linear so this mask decides it.
    for (int i = 0; i < n; ++i) {
        Element t = zero();
        Element x{std::uint32_t{1} << i};
        for (int j = 0; j < n; ++j) {
            t += x;
            x = mul_slow(x, x);
        }
        if (t == one()) trace_mask_ |= std::uint32_t{1} << i;
    }

    for (int i = 0; i < n; ++i) {
        Element x{std::uint32_t{1} << i};
        std::uint32_t mask = 0;
        for (int j = 0; j < n; ++j) {
            if (abs_trace(mul_slow(x, Element{std::uint32_t{1} << j}))) mask |= std::uint32_t{1} << j;
        }
        basis_functionals_[static_cast<std::size_t>(i)] = mask;
    }

    if (n <= kLogTableMaxDegree) {
        exp_.resize(2 * std::size_t{group});
        log_.assign(q_, 0);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < group; ++i) {
            exp_[i] = x;
            exp_[i + group] = x;
            log_[x] = i;
            x <<= 1;
            if (x & q_) x ^= poly_;
        }
    }
}

Element Field::element(std::uint32_t bits) const {
    if (bits >= q_)
        throw UsageError("bit pattern " + hex(bits) + " is not an element of GF(2^" +
                         std::to_string(n_) + ")");
    return Element{bits};
}

std::vector<Element> Field::elements() const {
    std::vector<Element> out(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out[i] = Element{i};
    return out;
}

std::uint32_t Field::trace_functional(Element a) const {
    std::uint32_t mask = 0;
    for (std::uint32_t bits = a.bits; bits != 0; bits &= bits - 1)
        mask ^= basis_functionals_[static_cast<std::size_t>(std::countr_zero(bits))];
    return mask;
}

Element Field::mul_slow(Element a, Element b) const {
    std::uint32_t r = 0;
    std::uint32_t x = a.bits;
    for (std::uint32_t y = b.bits; y != 0; y >>= 1) {
        if (y & 1) r ^= x;
        x <<= 1;
        if (x & q_) x ^= poly_;
    }
    return Element{r};
}

Element Field::mul(Element a, Element b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    if (log_.empty()) return mul_slow(a, b);
    return Element{exp_[log_[a.bits] + log_[b.bits]]};
}

Element Field::inv(Element a) const {
    if (a.is_zero()) return zero();
    if (log_.empty()) return pow(a, static_cast<std::int64_t>(q_) - 2);
    const std::uint32_t l = log_[a.bits];
    return Element{exp_[l == 0 ? 0 : (q_ - 1) - l]};
}

Element Field::pow(Element a, std::int64_t e) const {
    if (e == 0) return one();
    if (a.is_zero()) return zero();
    const auto group = static_cast<std::int64_t>(q_ - 1);
    std::int64_t r = e % group;
    if (r < 0) r += group;
    if (!log_.empty()) {
        const std::uint64_t l = (std::uint64_t{log_[a.bits]} * static_cast<std::uint64_t>(r)) % (q_ - 1);
        return Element{exp_[l]};
    }
    Element acc = one();
    Element base = a;
    for (auto u = static_cast<std::uint64_t>(r); u != 0; u >>= 1) {
        if (u & 1) acc = mul_slow(acc, base);
        base = mul_slow(base, base);
    }
    return acc;
}

Element Field::exp(std::int64_t i) const { return pow(generator(), i); }

std::uint32_t Field::log(Element x) const {
    if (x.is_zero()) throw UsageError("discrete log of zero");
    if (!log_.empty()) return log_[x.bits];
    // Baby-step giant-step fallback for n > 20.
    const std::uint32_t group = q_ - 1;
    const auto step = static_cast<std::uint32_t>(std::ceil(std::sqrt(double(group))));
    std::vector<std::pair<std::uint32_t, std::uint32_t>> baby(step);
    Element cur = one();
    for (std::uint32_t j = 0; j < step; ++j) {
        baby[j] = {cur.bits, j};
        cur = mul_slow(cur, generator());
    }
    std::sort(baby.begin(), baby.end());
    const Element giant = inv(pow(generator(), step));
    Element gamma = x;
    for (std::uint32_t i = 0; i <= step; ++i) {
        auto it = std::lower_bound(baby.begin(), baby.end(), std::pair{gamma.bits, 0u});
        if (it != baby.end() && it->first == gamma.bits) return (i * step + it->second) % group;
        gamma = mul_slow(gamma, giant);
    }
    throw ConsistencyError("discrete log not found for " + format(x));
}

Element Field::frobenius(Element x, int i) const {
    i %= n_;
    if (i < 0) i += n_;
    if (x.is_zero() || i == 0) return x;
    if (!log_.empty()) {
        const std::uint64_t l = (std::uint64_t{log_[x.bits]} << i) % (q_ - 1);
        return Element{exp_[l]};
    }
    for (int j = 0; j < i; ++j) x = mul_slow(x, x);
    return x;
}

void Field::require_divisor(int e) const {
    if (e <= 0 || n_ % e != 0)
        throw UsageError(std::to_string(e) + " does not divide n = " + std::to_string(n_));
}

Element Field::rel_trace(Element x, int e) const {
    require_divisor(e);
    Element t = zero();
    for (int i = 0; i < n_ / e; ++i) {
        t += x;
        x = frobenius(x, e);
    }
    return t;
}

bool Field::in_subfield(Element x, int e) const {
    require_divisor(e);
    return frobenius(x, e) == x;
}

bool Field::gold_residue_by_power(Element u, int e) const {
    const std::uint32_t modulus = (std::uint32_t{1} << e) + 1;
    return pow(u, (q_ - 1) / modulus) == one();
}

bool Field::gold_residue_by_log(Element u, int e) const {
    if (log_.empty()) throw UsageError("no log table for n > 20");
    return log_[u.bits] % ((std::uint32_t{1} << e) + 1) == 0;
}

bool Field::is_gold_residue(Element u, int e) const {
    require_divisor(e);
    if (u.is_zero()) throw UsageError("gold residue test of zero");
    if ((n_ / e) % 2 != 0)
        throw UsageError("n/e = " + std::to_string(n_ / e) +
                         " is odd: every nonzero element is a (2^e+1)-th power");
    return log_.empty() ? gold_residue_by_power(u, e) : gold_residue_by_log(u, e);
}

std::uint32_t Field::order_of(Element x) const {
    if (x.is_zero()) throw UsageError("order of zero");
    std::uint32_t ord = q_ - 1;
    for (std::uint64_t p : prime_factors(q_ - 1)) {
        while (ord % p == 0 && pow(x, ord / p) == one()) ord /= static_cast<std::uint32_t>(p);
    }
    return ord;
}

std::string Field::format(Element x) const { return format_element(n_, x); }

std::string hex_string(std::uint64_t v, int width) { return hex(v, width); }

std::string format_element(int n, Element x) { return hex(x.bits, std::max(2, (n + 3) / 4)); }

Element Field::parse(std::string_view text) const {
    auto fail = [&](const std::string& why) -> UsageError {
        return UsageError("cannot parse element '" + std::string(text) + "': " + why);
    };
    if (text == "0") return zero();
    if (text == "1") return one();
    if (text == "g") return generator();
    if (text.starts_with("g^")) {
        std::string_view digits = text.substr(2);
        if (digits.starts_with('{') && digits.ends_with('}')) digits = digits.substr(1, digits.size() - 2);
        std::int64_t i = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), i);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
            throw fail("bad exponent");
        return exp(i);
    }
    if (text.starts_with("0x") || text.starts_with("0X")) {
        std::string_view digits = text.substr(2);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v, 16);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
            throw fail("bad hex");
        if (v >= q_) throw fail("outside GF(2^" + std::to_string(n_) + ")");
        return Element{static_cast<std::uint32_t>(v)};
    }
    throw fail("expected 0, 1, g, g^i or 0xHH");
}

std::string Field::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n_;
    j["poly"] = hex(poly_);
    j["generator"] = "g";
    return j.dump();
}

Field Field::from_json(std::string_view json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& ex) {
        throw UsageError(std::string("field JSON: ") + ex.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) throw UsageError("field JSON: missing integer n");
    const int n = j["n"].get<int>();
    if (!j.contains("poly")) return Field(n);
    const auto text = j["poly"].get<std::string>();
    if (!text.starts_with("0x") && !text.starts_with("0X")) throw UsageError("field JSON: poly must be 0xHEX");
    std::uint32_t poly = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 2, text.data() + text.size(), poly, 16);
    if (ec != std::errc{} || ptr != text.data() + text.size()) throw UsageError("field JSON: bad poly " + text);
    if (j.contains("generator") && j["generator"] != "g")
        throw UsageError("field JSON: only generator \"g\" (class of y) is supported");
    return Field(n, poly);
}

GoldParams GoldParams::make(int n, int k) {
    if (n < Field::kMinDegree || n > Field::kMaxDegree)
        throw UsageError("n = " + std::to_string(n) + " outside [2, 24]");
    if (k < 1 || k >= n)
        throw UsageError("k = " + std::to_string(k) + " outside [1, n)");
    GoldParams p;
    p.n = n;
    p.k = k;
    p.e = std::gcd(k, n);
    p.ratio_odd = (n / p.e) % 2 == 1;
    if (!p.ratio_odd) p.m = n / 2;
    return p;
}

std::uint64_t gold_gcd(int k, int n) {
    if (k < 1 || k >= n) throw UsageError("gold_gcd needs 1 <= k < n");
    const int e = std::gcd(k, n);
    return (n / e) % 2 == 1 ? 1 : (std::uint64_t{1} << e) + 1;
}

int jacobi_2(std::int64_t m) {
    if (m < 1 || m % 2 == 0) throw UsageError("jacobi_2 needs odd M >= 1, got " + std::to_string(m));
    return ((m * m - 1) / 8) % 2 == 0 ? 1 : -1;
}

std::uint64_t inverse_exponent(std::uint64_t d, int n) {
    const auto modulus = static_cast<std::int64_t>((std::uint64_t{1} << n) - 1);
    std::int64_t r0 = modulus, r1 = static_cast<std::int64_t>(d % static_cast<std::uint64_t>(modulus));
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t quot = r0 / r1;
        r0 = std::exchange(r1, r0 - quot * r1);
        t0 = std::exchange(t1, t0 - quot * t1);
    }
    if (r0 != 1)
        throw UsageError("x^" + std::to_string(d) + " is not a permutation of GF(2^" + std::to_string(n) +
                         "): gcd(d, 2^n-1) = " + std::to_string(r0));
    if (t0 < 0) t0 += modulus;
    if (modulus == 1) return 1;
    return static_cast<std::uint64_t>(t0);
}

}  // namespace goldbct
