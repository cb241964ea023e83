#include "goldbct/equiv.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "goldbct/errors.hpp"

namespace goldbct {
namespace {

void require_linear_permutation(const SBox& l, const SBox& f) {
    if (!(l.field() == f.field())) throw UsageError("L and F live over different fields");
    if (!is_linear(l)) throw UsageError("L is not F_2-linear");
    if (!l.is_permutation()) throw UsageError("L is not a permutation");
}

std::vector<std::uint64_t> nonzero_entry_set(const SpectrumTable& t) {
    return entry_set(t, false);
}

std::vector<std::uint64_t> parse_set(std::string_view text, int line) {
    std::vector<std::uint64_t> out;
    while (!text.empty()) {
        const auto bar = text.find('|');
        const std::string_view item = text.substr(0, bar);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty())
            throw UsageError("table1 CSV line " + std::to_string(line) + ": bad set item '" + std::string(item) + "'");
        out.push_back(v);
        if (bar == std::string_view::npos) break;
        text.remove_prefix(bar + 1);
    }
    return out;
}

std::string join(const std::vector<std::uint64_t>& set) {
    std::string out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += '|';
        out += std::to_string(set[i]);
    }
    return out;
}

}  // namespace

std::string_view to_string(Transformation t) {
    switch (t) {
        case Transformation::c_inverse_swap: return "c-inverse-swap";
        case Transformation::input_linear: return "input-linear";
        case Transformation::output_linear: return "output-linear";
    }
    return "?";
}

bool is_linear(const SBox& l) {
    const auto table = l.table();
    if (!table[0].is_zero()) return false;
    for (std::uint32_t x = 1; x < l.size(); ++x) {
        // x = (x with its lowest bit cleared) + lowest bit
        const std::uint32_t low = x & (~x + 1);
        if (table[x] != table[x ^ low] + table[low]) return false;
    }
    return true;
}

EquivalenceReport check_c_inverse_symmetry(const SBox& f, Element c, const SweepOptions& opts) {
    EquivalenceReport r;
    r.transformation = Transformation::c_inverse_swap;
    const Element cinv = f.field().inv(c);
    const SpectrumTable left = cbct_full(f, c, opts);
    const SpectrumTable right = cinv == c ? left : cbct_full(f, cinv, opts);
    r.left_set = nonzero_entry_set(left);
    r.right_set = nonzero_entry_set(right);
    const std::uint32_t q = f.size();
    for (std::uint64_t i = 0; i < left.counts.size(); ++i) {
        if (left.counts[i] != right.counts[i]) {
            r.preserved = false;
            r.witness = Witness{c, Element{static_cast<std::uint32_t>(i / q)}, Element{static_cast<std::uint32_t>(i % q)},
                                left.counts[i], right.counts[i]};
            break;
        }
    }
    return r;
}

EquivalenceReport check_input_composition(const SBox& f, const SBox& l, Element c, const SweepOptions& opts) {
    require_linear_permutation(l, f);
    EquivalenceReport r;
    r.transformation = Transformation::input_linear;
    const SBox composed = f.compose(l);
    const SpectrumTable left = cbct_full(composed, c, opts);
    const SpectrumTable right = cbct_full(f, c, opts);
    r.left_set = nonzero_entry_set(left);
    r.right_set = nonzero_entry_set(right);
    const std::uint32_t q = f.size();
    for (std::uint32_t a = 0; a < q && r.preserved; ++a) {
        const Element la = l(Element{a});
        for (std::uint32_t b = 0; b < q; ++b) {
            const std::uint64_t lhs = left.at(Element{a}, Element{b});
            const std::uint64_t rhs = right.at(la, Element{b});
            if (lhs != rhs) {
                r.preserved = false;
                r.witness = Witness{c, Element{a}, Element{b}, lhs, rhs};
                break;
            }
        }
    }
    return r;
}

EquivalenceReport check_output_composition(const SBox& f, const SBox& l, Element c, const SweepOptions& opts) {
    require_linear_permutation(l, f);
    EquivalenceReport r;
    r.transformation = Transformation::output_linear;
    const SBox composed = l.compose(f);
    const SpectrumTable left = cbct_full(composed, c, opts);
    const SpectrumTable right = cbct_full(f, c, opts);
    r.left_set = nonzero_entry_set(left);
    r.right_set = nonzero_entry_set(right);
    if (r.left_set == r.right_set) return r;

    r.preserved = false;
    // A value in exactly one set; the cell holding it differs between the tables.
    std::vector<std::uint64_t> only_left, only_right;
    std::set_difference(r.left_set.begin(), r.left_set.end(), r.right_set.begin(), r.right_set.end(),
                        std::back_inserter(only_left));
    std::set_difference(r.right_set.begin(), r.right_set.end(), r.left_set.begin(), r.left_set.end(),
                        std::back_inserter(only_right));
    const bool use_left = !only_left.empty();
    const std::uint64_t value = use_left ? only_left.front() : only_right.front();
    const SpectrumTable& holder = use_left ? left : right;
    const std::uint32_t q = f.size();
    for (std::uint32_t a = 1; a < q && !r.witness; ++a) {
        for (std::uint32_t b = 1; b < q; ++b) {
            if (holder.at(Element{a}, Element{b}) == value) {
                r.witness = Witness{c, Element{a}, Element{b}, left.at(Element{a}, Element{b}),
                                    right.at(Element{a}, Element{b})};
                break;
            }
        }
    }
    if (!r.witness || r.witness->left == r.witness->right)
        throw ConsistencyError("entry sets differ but no differing cell was found");
    return r;
}

TranslationReport report_translation(const SBox& f, Element t, Element c, const SweepOptions& opts) {
    if (!f.field().contains(t)) throw UsageError("translation lies outside the field");
    TranslationReport r;
    r.t = t;
    const SBox shifted(f.field_ptr(), [&](Element x) { return f(x + t); });
    const SpectrumTable left = cbct_full(shifted, c, opts);
    const SpectrumTable right = cbct_full(f, c, opts);
    r.entrywise_equal = left.counts == right.counts;
    r.left_set = nonzero_entry_set(left);
    r.right_set = nonzero_entry_set(right);
    r.entry_sets_equal = r.left_set == r.right_set;
    return r;
}

std::vector<Table1Row> parse_table1_csv(std::string_view csv) {
    std::vector<Table1Row> rows;
    std::istringstream in{std::string(csv)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (number == 1) {
            if (line != "c,exponents,f_set,g_set") throw UsageError("table1 CSV: unexpected header '" + line + "'");
            continue;
        }
        std::vector<std::string_view> cells;
        std::string_view rest = line;
        for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1))
            cells.push_back(rest.substr(0, pos));
        cells.push_back(rest);
        if (cells.size() != 4) throw UsageError("table1 CSV line " + std::to_string(number) + ": expected 4 cells");
        Table1Row row;
        auto [ptr, ec] = std::from_chars(cells[1].data(), cells[1].data() + cells[1].size(), row.exponent);
        if (ec != std::errc{} || cells[0] != "g^" + std::string(cells[1]))
            throw UsageError("table1 CSV line " + std::to_string(number) + ": c and exponent disagree");
        row.f_set = parse_set(cells[2], number);
        row.g_set = parse_set(cells[3], number);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_table1_csv(const std::vector<Table1Row>& rows) {
    std::string out = "c,exponents,f_set,g_set\n";
    for (const auto& r : rows)
        out += "g^" + std::to_string(r.exponent) + "," + std::to_string(r.exponent) + "," + join(r.f_set) + "," +
               join(r.g_set) + "\n";
    return out;
}

std::vector<Table1Row> compute_table1(const SweepOptions& opts) {
    auto field = std::make_shared<const Field>(6);
    const SBox f = SBox::power(field, 17);
    const SBox g(field, [&](Element x) {
        return field->pow(x, 5) + field->mul(Field::generator(), field->pow(x, 17));
    });
    std::vector<Table1Row> rows;
    for (int i = 1; i <= 31; ++i) {
        const Element c = field->exp(i);
        Table1Row row;
        row.exponent = i;
        row.f_set = entry_set(cbct_brute(f, c, Field::one(), opts), false);
        row.g_set = entry_set(cbct_full(g, c, opts), false);
        rows.push_back(std::move(row));
    }
    return rows;
}

Table1Report reproduce_table1(const SweepOptions& opts) {
    Table1Report r;
    r.computed = compute_table1(opts);
    r.expected = parse_table1_csv(table1_golden_csv());
    if (r.expected.size() != r.computed.size()) throw ConsistencyError("golden table has the wrong number of rows");
    for (std::size_t i = 0; i < r.computed.size(); ++i) {
        const auto& got = r.computed[i];
        const auto& want = r.expected[i];
        if (got.exponent != want.exponent) throw ConsistencyError("golden table rows are out of order");
        if (got.f_set != want.f_set) r.mismatches.push_back({got.exponent, 'f', got.f_set, want.f_set});
        if (got.g_set != want.g_set) r.mismatches.push_back({got.exponent, 'g', got.g_set, want.g_set});
    }
    r.byte_exact = format_table1_csv(r.computed) == table1_golden_csv();
    return r;
}

SBox gold_binomial(std::shared_ptr<const Field> field, int k, Element u) {
    const GoldParams p = GoldParams::make(field->degree(), k);
    const auto d1 = static_cast<std::int64_t>(p.exponent());
    const auto d2 = static_cast<std::int64_t>((std::uint64_t{1} << (p.n - k)) + 1);
    const Field& f = *field;
    return SBox(field, [&](Element x) { return f.pow(x, d1) + f.mul(u, f.pow(x, d2)); });
}

bool binomial_pp_criterion(const Field& field, int k, Element u) {
    const GoldParams p = GoldParams::make(field.degree(), k);
    if (!p.ratio_odd) return false;
    if (u.is_zero()) return true;
    // u = g^(t(2^e-1)) iff u^((q-1)/(2^e-1)) = 1
    const std::uint32_t divisor = (std::uint32_t{1} << p.e) - 1;
    return field.pow(u, (field.size() - 1) / divisor) != Field::one();
}

}  // namespace goldbct
