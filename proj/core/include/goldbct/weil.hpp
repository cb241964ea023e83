#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "goldbct/field.hpp"
#include "goldbct/linearized.hpp"
#include "goldbct/sbox.hpp"

namespace goldbct {

enum class SumMethod { brute, closed };

/// Which closed forms to use for the quadratic Weil sums.
///
/// `corrected` is exact everywhere. `as_printed` reproduces the original
/// statements literally: it drops the chi1(x0^(2^k+1) + x0) factor in the
/// odd-ratio evaluation and uses (-1)^(m/e) 2^m for solvable residues with
/// nonzero relative trace. It is kept only to report where those differ.
enum class WeilFormula { corrected, as_printed };

/// An exact character sum together with how it was produced.
struct WeilResult {
    std::int64_t value = 0;
    SumMethod method = SumMethod::brute;
    /// Closed-form branch; one of L23-1-zero, L23-1-nonzero, L23-2-nonres,
    /// L23-2-res, L24-tr1, L24-not1, L25-1, L25-2-solv-trne0,
    /// L25-2-solv-treq0, L25-2-unsolv, orth. Empty for brute force.
    std::string_view case_tag;
};

/// Canonical additive character (-1)^Tr(x).
inline int chi1(const Field& field, Element x) { return field.abs_trace(x) ? -1 : 1; }

/// In-place Walsh-Hadamard butterfly: out[m] = sum_x in[x] (-1)^popcount(m & x).
void fast_walsh_hadamard(std::span<std::int64_t> values);

/// sum_x chi1(u x^(2^k+1) + v x), evaluated term by term.
WeilResult weil_brute(const Field& field, Element u, Element v, int k);

/// weil_brute(u, v) for every v at once, indexed by v.bits. O(q log q).
std::vector<std::int64_t> weil_brute_row(const Field& field, Element u, int k);

/// Closed-form Weil sums for one (field, k).
///
/// Dispatches on u = 0, v = 0, the parity of n/e, gold residuosity of u,
/// solvability of L_u(x) = v^(2^k) and the relative-trace conditions. For n/e
/// odd and u, v != 0 the sum is first reduced to S(1, v/gamma) with
/// gamma^(2^k+1) = u.
class WeilClosedForm {
public:
    WeilClosedForm(const Field& field, int k, WeilFormula formula = WeilFormula::corrected);

    [[nodiscard]] WeilResult evaluate(Element u, Element v) const;
    /// evaluate(u, v) for all v, indexed by v.bits; builds L_u once.
    [[nodiscard]] std::vector<WeilResult> row(Element u) const;

    [[nodiscard]] const GoldParams& params() const { return params_; }

private:
    [[nodiscard]] WeilResult evaluate_with(Element u, Element v, const BinaryLinearMap* lu) const;
    [[nodiscard]] WeilResult odd_ratio(Element u, Element v) const;
    [[nodiscard]] WeilResult even_ratio(Element u, Element v, const BinaryLinearMap* lu) const;

    const Field& field_;
    GoldParams params_;
    WeilFormula formula_;
    std::uint64_t root_exponent_ = 0;  // inverse of 2^k+1 mod 2^n-1 when n/e odd
    BinaryLinearMap l_one_;            // L_1(x) = x^(2^(2k)) + x
};

/// One-shot closed evaluation.
WeilResult weil_closed(const Field& field, Element u, Element v, int k,
                       WeilFormula formula = WeilFormula::corrected);

/// S_{alpha,beta} = sum_x chi1(alpha x^(2^k+1) + beta (x+1)^(2^k+1)).
/// Closed route: chi1(beta) * S(A, B) with A = alpha+beta, B = beta^(2^(n-k))+beta.
WeilResult s_alpha_beta(const Field& field, Element alpha, Element beta, int k, SumMethod method,
                        WeilFormula formula = WeilFormula::corrected);

/// The coefficient pair (A, B) that S_{alpha,beta} reduces to.
struct ReducedPair {
    Element a;
    Element b;
};
ReducedPair reduce_pair(const Field& field, Element alpha, Element beta, int k);

/// Walsh transform sum_x (-1)^(Tr(b F(x)) + Tr(a x)), computed naively.
std::int64_t walsh(const SBox& sbox, Element a, Element b);

/// walsh(sbox, a, b) for all a, indexed by a.bits.
std::vector<std::int64_t> walsh_spectrum(const SBox& sbox, Element b);

}  // namespace goldbct
