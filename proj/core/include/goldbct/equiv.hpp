#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goldbct/field.hpp"
#include "goldbct/sbox.hpp"
#include "goldbct/tables.hpp"

namespace goldbct {

enum class Transformation { c_inverse_swap, input_linear, output_linear };

std::string_view to_string(Transformation t);

/// A cell where the two sides of a claimed equality differ.
struct Witness {
    Element c, a, b;
    std::uint64_t left = 0;
    std::uint64_t right = 0;
};

struct EquivalenceReport {
    Transformation transformation = Transformation::c_inverse_swap;
    bool preserved = true;
    std::optional<Witness> witness;  // present iff !preserved
    std::vector<std::uint64_t> left_set, right_set;  // entry sets over a != 0, b != 0
};

/// cB_F(a, b) = c^-1 B_F(a, b) for every (a, b).
EquivalenceReport check_c_inverse_symmetry(const SBox& f, Element c, const SweepOptions& opts = {});

/// cB_{F o L}(a, b) = cB_F(L(a), b) for every (a, b). L must be an F_2-linear
/// permutation (UsageError otherwise).
EquivalenceReport check_input_composition(const SBox& f, const SBox& l, Element c, const SweepOptions& opts = {});

/// Entry sets of L o F and F over a != 0, b != 0. When they differ the
/// witness is a cell holding a value that only one of the tables contains.
EquivalenceReport check_output_composition(const SBox& f, const SBox& l, Element c, const SweepOptions& opts = {});

/// x -> F(x + t) against F. Informational: nothing is asserted about it.
struct TranslationReport {
    Element t;
    bool entrywise_equal = false;
    bool entry_sets_equal = false;
    std::vector<std::uint64_t> left_set, right_set;
};
TranslationReport report_translation(const SBox& f, Element t, Element c, const SweepOptions& opts = {});

/// The table is F_2-linear: L(x + y) = L(x) + L(y) for all x, y.
bool is_linear(const SBox& l);

/// One row of the GF(2^6) entry-set table: c = g^exponent.
struct Table1Row {
    int exponent = 0;
    std::vector<std::uint64_t> f_set;  // x^17
    std::vector<std::uint64_t> g_set;  // x^5 + g x^17
};

struct Table1Mismatch {
    int exponent = 0;
    char column = 'f';
    std::vector<std::uint64_t> computed, expected;
};

struct Table1Report {
    std::vector<Table1Row> computed;
    std::vector<Table1Row> expected;
    std::vector<Table1Mismatch> mismatches;
    bool byte_exact = false;  // rendered CSV equals the golden file

    [[nodiscard]] bool matches() const { return mismatches.empty() && byte_exact; }
};

/// The golden CSV `c,exponents,f_set,g_set`, compiled into the library.
std::string_view table1_golden_csv();
std::vector<Table1Row> parse_table1_csv(std::string_view csv);
std::string format_table1_csv(const std::vector<Table1Row>& rows);

/// Entry sets over GF(2^6) with y^6+y^4+y^3+y+1 for c = g, ..., g^31.
/// x^17 is a power map, so its column sweeps a = 1 only; x^5 + g x^17 is not,
/// so its column sweeps every a != 0. Both take b != 0.
std::vector<Table1Row> compute_table1(const SweepOptions& opts = {});
Table1Report reproduce_table1(const SweepOptions& opts = {});

/// x^(2^k+1) + u x^(2^(n-k)+1) as a table.
SBox gold_binomial(std::shared_ptr<const Field> field, int k, Element u);
/// Predicted bijectivity: n/e odd and u not of the form g^(t(2^e-1)).
bool binomial_pp_criterion(const Field& field, int k, Element u);

}  // namespace goldbct
