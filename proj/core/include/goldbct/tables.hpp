#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goldbct/field.hpp"
#include "goldbct/sbox.hpp"

namespace goldbct {

enum class TableKind { cddt, cbct_row, cbct_full };

std::string_view to_string(TableKind kind);
TableKind table_kind_from_string(std::string_view text);

/// Counts indexed by b (rows) or by a * q + b (full tables).
///
/// Rows carry the fixed input difference `a`; full tables leave it empty and
/// hold every a, a = 0 included.
struct SpectrumTable {
    TableKind kind = TableKind::cbct_row;
    int n = 0;
    std::uint32_t poly = 0;
    Element c;
    std::optional<Element> a;
    std::vector<std::uint64_t> counts;

    [[nodiscard]] std::uint32_t q() const { return std::uint32_t{1} << n; }
    [[nodiscard]] bool is_full() const { return !a.has_value(); }
    [[nodiscard]] std::uint64_t at(Element b) const;
    [[nodiscard]] std::uint64_t at(Element a, Element b) const;

    friend bool operator==(const SpectrumTable&, const SpectrumTable&) = default;
};

/// Worker count and guardrail override for the exhaustive sweeps.
struct SweepOptions {
    unsigned threads = 0;  // 0 picks hardware_concurrency
    bool force = false;    // lift the size guardrails
};

inline constexpr int kFullTableMaxDegree = 12;
inline constexpr int kRowMaxDegree = 16;

/// c-DDT row: #{x : F(x+a) + c F(x) = b} for every b.
SpectrumTable cddt_row(const SBox& f, Element c, Element a);
/// Full c-DDT over (a, b). Throws UsageError for c = 0.
SpectrumTable cddt(const SBox& f, Element c, const SweepOptions& opts = {});
/// delta_{F,c}: max over a != 0 when c = 1, over every a otherwise.
std::uint64_t c_differential_uniformity(const SpectrumTable& cddt_table);
std::uint64_t c_differential_uniformity(const SBox& f, Element c, const SweepOptions& opts = {});

/// c-BCT row at fixed a from one sweep over (x, y): counts[b] is the number
/// of (x, y) with F(x) + cF(y) = b = F(x+a) + c^-1 F(y+a).
SpectrumTable cbct_brute(const SBox& f, Element c, Element a, const SweepOptions& opts = {});
/// Every row of the c-BCT, a = 0 included.
SpectrumTable cbct_full(const SBox& f, Element c, const SweepOptions& opts = {});

/// beta_{F,c}. With `power_shortcut` only a = 1 is swept, which is legal for
/// power maps only (UsageError otherwise).
std::uint64_t cbct_uniformity(const SBox& f, Element c, bool power_shortcut,
                              const SweepOptions& opts = {});

/// The c-BCT entry at (1, b) of x^d assembled from c-DDT column sums and
/// products of S_{alpha,beta} = sum_x chi1(alpha x^d + beta (x+1)^d). Every
/// division is checked to be exact (ConsistencyError otherwise).
std::int64_t cbct_via_ddt_weil(const Field& field, std::uint64_t d, Element c, Element b);

/// Same for every b at once, indexed by b.bits; entry 0 is left at 0.
class DdtWeilEvaluator {
public:
    DdtWeilEvaluator(std::shared_ptr<const Field> field, std::uint64_t d, Element c);
    [[nodiscard]] std::int64_t evaluate(Element b) const;
    [[nodiscard]] std::vector<std::int64_t> row() const;

private:
    std::shared_ptr<const Field> field_;
    Element c_;
    std::vector<std::int64_t> s_;  // S_{alpha,beta} at alpha * q + beta
    std::vector<std::uint64_t> ddt_columns_c_;
    std::vector<std::uint64_t> ddt_columns_cinv_;
};

/// Distinct counts, ascending, over the admissible a (a != 0 for the c-BCT
/// and for the c-DDT at c = 1, any a for the c-DDT otherwise) and over b.
std::vector<std::uint64_t> entry_set(const SpectrumTable& table, bool include_b_zero = true);
/// c-BCT: max over a != 0, b != 0. c-DDT: max over admissible a, every b.
std::uint64_t uniformity(const SpectrumTable& table);

std::string to_csv(const SpectrumTable& table);
/// {"kind","n","poly","c","a","counts":{"0xHH":int},"uniformity","entry_set"}.
/// Full-table keys are "0xAA,0xBB". Entry sets cover every b.
std::string to_json(const SpectrumTable& table);
SpectrumTable table_from_json(std::string_view json);

}  // namespace goldbct
