#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goldbct/field.hpp"
#include "goldbct/weil.hpp"

namespace goldbct {

/// Labels of the pair sets. Coarse: A (alpha = beta in F_{2^e}), B (alpha =
/// beta outside it), C (alpha != beta, beta in F_{2^e}), D (the rest).
/// Refinements: E/F split D when n/e is odd; G/H split C and I/J/K/L split D
/// when n/e is even.
enum class PairSet : std::uint8_t { A, B, C, D, E, F, G, H, I, J, K, L };

char to_char(PairSet s);

/// How one side (alpha, beta) of a pair classifies, plus the character
/// factor its Weil sum carries.
struct SideClass {
    PairSet coarse = PairSet::A;
    PairSet fine = PairSet::A;  // equals coarse when there is no refinement
    /// F: x0 with L_1(x0) = (1 + B/gamma)^(2^k). I, K, L: the particular
    /// solution x_A of L_A(x) = B^(2^k). Zero otherwise.
    Element x;
    /// F: chi1(x0^d + x0). I, K, L: chi1(A x_A^d). 1 otherwise.
    int factor = 1;
};

/// Classification of (alpha, beta) and of (c alpha, c^-1 beta).
struct PairClass {
    Element alpha, beta, c;
    Element a_coef, b_coef;              // A = alpha + beta, B = beta^(2^(n-k)) + beta
    Element a_coef_primed, b_coef_primed;
    std::optional<Element> gamma, gamma_primed;  // A^(1/(2^k+1)) when n/e odd and A != 0
    SideClass side, primed;

    /// e.g. "D,F,C',G'"
    [[nodiscard]] std::string labels() const;
};

/// Classifies every (alpha, beta) once for a given (field, k); the sets do
/// not depend on c or b, so each theorem reuses the same side table.
class PairClassifier {
public:
    PairClassifier(std::shared_ptr<const Field> field, int k);

    [[nodiscard]] const Field& field() const { return *field_; }
    [[nodiscard]] const GoldParams& params() const { return params_; }
    [[nodiscard]] const SideClass& side(Element alpha, Element beta) const {
        return table_[static_cast<std::size_t>(alpha.bits) * field_->size() + beta.bits];
    }
    [[nodiscard]] PairClass classify(Element alpha, Element beta, Element c) const;

private:
    std::shared_ptr<const Field> field_;
    GoldParams params_;
    std::vector<SideClass> table_;
};

/// Classify one pair from scratch. c must be nonzero.
PairClass classify_pair(const Field& field, Element alpha, Element beta, Element c, const GoldParams& params);

/// Which T_b weight tables the evaluators use. `corrected` gives the exact
/// c-BCT entry. `as_printed` follows the original tables literally: no
/// chi1(x0^d + x0) factors on F pairs, K weighted like I, and the
/// subfield-even M factor taken as the character of a product.
enum class WeightTable { corrected, as_printed };

enum class GoldTheorem { c1_odd, c1_even, subfield_odd, subfield_even, general_odd, general_even };

std::string_view to_string(GoldTheorem t);

/// The theorem whose hypotheses (c, n/e) satisfy. c must be nonzero.
GoldTheorem theorem_for(const Field& field, Element c, const GoldParams& params);

/// One theorem at one c, for every b.
///
/// Each pair contributes T(alpha, beta) chi1(b(alpha + beta)) where T comes
/// from the theorem's weight table; T is aggregated by alpha + beta once, so
/// every b costs O(q), and the total is divided by q^2 with exactness checked.
class GoldEvaluator {
public:
    /// Throws UsageError when c does not satisfy the theorem's hypotheses.
    GoldEvaluator(std::shared_ptr<const PairClassifier> classifier, GoldTheorem theorem, Element c,
                  WeightTable weights = WeightTable::corrected);

    [[nodiscard]] GoldTheorem theorem() const { return theorem_; }
    /// Entry at (1, b); b must be nonzero.
    [[nodiscard]] std::int64_t evaluate(Element b) const;
    /// evaluate(b) for every b != 0, indexed by b.bits (slot 0 unused). With
    /// `as_printed` weights a non-integral entry is reported as nullopt.
    [[nodiscard]] std::vector<std::optional<std::int64_t>> row() const;
    /// q^2 times the entry, before division.
    [[nodiscard]] std::int64_t scaled(Element b) const;

    /// Number of pairs (alpha, beta) whose weight is nonzero.
    [[nodiscard]] std::uint64_t support() const { return support_; }

private:
    std::shared_ptr<const PairClassifier> classifier_;
    GoldTheorem theorem_;
    Element c_;
    WeightTable weights_;
    std::vector<std::int64_t> by_sum_;     // sum of T over pairs with alpha + beta = s
    std::vector<std::int64_t> transform_;  // Walsh transform of by_sum_
    std::uint64_t support_ = 0;
};

/// Closed form for c = 1, n/e odd: 2^e unless Tr_e(sqrt(b)) = 0.
std::int64_t theorem_c1_odd(const Field& field, Element b, const GoldParams& params);
/// The same entry through its pair sum: 2^e + 2^(e-n) sum_F chi1(b(alpha+beta)).
std::int64_t theorem_c1_odd_sum(const Field& field, Element b, const GoldParams& params);

/// One-shot evaluators (build a classifier each call; use GoldEvaluator for sweeps).
std::int64_t theorem_c1_even(const Field& field, Element b, const GoldParams& params,
                             WeightTable weights = WeightTable::corrected);
std::int64_t theorem_subfield_odd(const Field& field, Element b, Element c, const GoldParams& params,
                                  WeightTable weights = WeightTable::corrected);
std::int64_t theorem_subfield_even(const Field& field, Element b, Element c, const GoldParams& params,
                                   WeightTable weights = WeightTable::corrected);
std::int64_t theorem_general_odd(const Field& field, Element b, Element c, const GoldParams& params,
                                 WeightTable weights = WeightTable::corrected);
std::int64_t theorem_general_even(const Field& field, Element b, Element c, const GoldParams& params,
                                  WeightTable weights = WeightTable::corrected);

/// Dispatch on c and n/e to the matching evaluator.
std::int64_t gold_cbct_closed(const Field& field, Element b, Element c, const GoldParams& params,
                              WeightTable weights = WeightTable::corrected);

/// (1/q^2) sum_{alpha,beta} chi1(b(alpha+beta)) S_{alpha,beta} S_{c alpha, c^-1 beta},
/// with the S values computed by `method`. Exact division is checked.
class DecompositionEvaluator {
public:
    DecompositionEvaluator(std::shared_ptr<const Field> field, int k, Element c, SumMethod method);
    [[nodiscard]] std::int64_t evaluate(Element b) const;

private:
    std::shared_ptr<const Field> field_;
    std::vector<std::int64_t> by_sum_;
    std::vector<std::int64_t> transform_;
};

std::int64_t decomposition_check(const Field& field, Element c, Element b, const GoldParams& params,
                                 SumMethod method);

/// A bound value / q^2 kept exact as `scaled` over q^2.
struct ScaledBound {
    std::int64_t scaled = 0;
    std::int64_t scale = 1;
    [[nodiscard]] bool admits(std::int64_t value) const { return value * scale <= scaled; }
};

/// Bound on max_b of the theorem's entries at this c from set cardinalities.
/// `corrected` is sum |T| / q^2 over the corrected weights, valid for every
/// theorem. `as_printed` evaluates the original bounds (c = 1 even,
/// subfield odd, general odd, with their grouping and signs) and throws
/// UsageError for the two theorems that have none.
ScaledBound corollary_bound(const PairClassifier& classifier, GoldTheorem theorem, Element c,
                            WeightTable weights = WeightTable::corrected);

}  // namespace goldbct
