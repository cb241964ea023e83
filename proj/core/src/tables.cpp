#include "goldbct/tables.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include <json.hpp>

#include "goldbct/errors.hpp"
#include "goldbct/parallel.hpp"
#include "goldbct/weil.hpp"

namespace goldbct {
namespace {

void require_nonzero_c(Element c) {
    if (c.is_zero()) throw UsageError("c must be nonzero");
}

void require_in_field(const Field& f, Element x, const char* what) {
    if (!f.contains(x))
        throw UsageError(std::string(what) + " lies outside GF(2^" + std::to_string(f.degree()) + ")");
}

void guard(int n, int limit, bool force, const std::string& what) {
    if (n > limit && !force)
        throw GuardrailError(what + " at n = " + std::to_string(n) + " exceeds the n <= " +
                             std::to_string(limit) + " guardrail; pass force to run it anyway");
}

SpectrumTable blank(const SBox& f, TableKind kind, Element c, std::optional<Element> a) {
    SpectrumTable t;
    t.kind = kind;
    t.n = f.field().degree();
    t.poly = f.field().polynomial();
    t.c = c;
    t.a = a;
    const std::uint64_t q = f.size();
    t.counts.assign(a ? q : q * q, 0);
    return t;
}

// Row of the c-BCT into `out` (length q), sweeping x in [begin, end).
void cbct_sweep(const SBox& f, Element c, Element a, std::uint64_t begin, std::uint64_t end,
                std::span<std::uint64_t> out) {
    const Field& field = f.field();
    const std::uint32_t q = f.size();
    const Element cinv = field.inv(c);
    std::vector<std::uint32_t> cf(q), cinv_fa(q);
    for (std::uint32_t y = 0; y < q; ++y) {
        cf[y] = field.mul(c, f(Element{y})).bits;
        cinv_fa[y] = field.mul(cinv, f(Element{y ^ a.bits})).bits;
    }
    for (std::uint64_t x = begin; x < end; ++x) {
        const std::uint32_t fx = f(Element{static_cast<std::uint32_t>(x)}).bits;
        const std::uint32_t fxa = f(Element{static_cast<std::uint32_t>(x) ^ a.bits}).bits;
        // b1 == b2  <=>  cf[y] ^ cinv_fa[y] == fx ^ fxa
        const std::uint32_t target = fx ^ fxa;
        for (std::uint32_t y = 0; y < q; ++y)
            if ((cf[y] ^ cinv_fa[y]) == target) ++out[fx ^ cf[y]];
    }
}

bool admissible_a(const SpectrumTable& t, std::uint32_t a) {
    if (a != 0) return true;
    return t.kind == TableKind::cddt && t.c != Field::one();
}

template <class Fn>
void for_each_cell(const SpectrumTable& t, bool include_b_zero, Fn fn) {
    const std::uint32_t q = t.q();
    if (!t.is_full()) {
        // a row already fixes a and is reported as computed
        for (std::uint32_t b = include_b_zero ? 0 : 1; b < q; ++b) fn(t.counts[b]);
        return;
    }
    for (std::uint32_t a = 0; a < q; ++a) {
        if (!admissible_a(t, a)) continue;
        for (std::uint32_t b = include_b_zero ? 0 : 1; b < q; ++b)
            fn(t.counts[static_cast<std::uint64_t>(a) * q + b]);
    }
}

Element parse_hex(std::string_view text, int n, const char* what) {
    std::uint32_t v = 0;
    if (text.size() < 3 || !(text.starts_with("0x") || text.starts_with("0X")))
        throw UsageError(std::string("table JSON: ") + what + " must be 0xHEX, got '" + std::string(text) + "'");
    auto [ptr, ec] = std::from_chars(text.data() + 2, text.data() + text.size(), v, 16);
    if (ec != std::errc{} || ptr != text.data() + text.size() || v >= (std::uint32_t{1} << n))
        throw UsageError(std::string("table JSON: bad ") + what + " '" + std::string(text) + "'");
    return Element{v};
}

}  // namespace

std::string_view to_string(TableKind kind) {
    switch (kind) {
        case TableKind::cddt: return "cDDT";
        case TableKind::cbct_row: return "cBCT-row";
        case TableKind::cbct_full: return "cBCT-full";
    }
    return "?";
}

TableKind table_kind_from_string(std::string_view text) {
    if (text == "cDDT") return TableKind::cddt;
    if (text == "cBCT-row") return TableKind::cbct_row;
    if (text == "cBCT-full") return TableKind::cbct_full;
    throw UsageError("unknown table kind '" + std::string(text) + "'");
}

std::uint64_t SpectrumTable::at(Element b) const {
    if (is_full()) throw UsageError("full table needs (a, b)");
    return counts.at(b.bits);
}

std::uint64_t SpectrumTable::at(Element a_, Element b) const {
    if (!is_full()) {
        if (a_ != *a) throw UsageError("row table holds a different a");
        return counts.at(b.bits);
    }
    return counts.at(static_cast<std::uint64_t>(a_.bits) * q() + b.bits);
}

SpectrumTable cddt_row(const SBox& f, Element c, Element a) {
    require_nonzero_c(c);
    require_in_field(f.field(), c, "c");
    require_in_field(f.field(), a, "a");
    SpectrumTable t = blank(f, TableKind::cddt, c, a);
    const Field& field = f.field();
    for (std::uint32_t x = 0; x < f.size(); ++x)
        ++t.counts[(f(Element{x ^ a.bits}) + field.mul(c, f(Element{x}))).bits];
    return t;
}

SpectrumTable cddt(const SBox& f, Element c, const SweepOptions& opts) {
    require_nonzero_c(c);
    require_in_field(f.field(), c, "c");
    guard(f.field().degree(), kRowMaxDegree, opts.force, "full c-DDT");
    SpectrumTable t = blank(f, TableKind::cddt, c, std::nullopt);
    const Field& field = f.field();
    const std::uint32_t q = f.size();
    std::vector<std::uint32_t> cf(q);
    for (std::uint32_t x = 0; x < q; ++x) cf[x] = field.mul(c, f(Element{x})).bits;
    // rows are disjoint, so workers write straight into the table
    parallel_chunks(q, opts.threads, 0, [&](std::uint64_t begin, std::uint64_t end, int&) {
        for (std::uint64_t a = begin; a < end; ++a) {
            std::uint64_t* row = t.counts.data() + a * q;
            for (std::uint32_t x = 0; x < q; ++x)
                ++row[f(Element{x ^ static_cast<std::uint32_t>(a)}).bits ^ cf[x]];
        }
    });
    return t;
}

std::uint64_t c_differential_uniformity(const SpectrumTable& t) {
    if (t.kind != TableKind::cddt) throw UsageError("not a c-DDT");
    return uniformity(t);
}

std::uint64_t c_differential_uniformity(const SBox& f, Element c, const SweepOptions& opts) {
    return c_differential_uniformity(cddt(f, c, opts));
}

SpectrumTable cbct_brute(const SBox& f, Element c, Element a, const SweepOptions& opts) {
    require_nonzero_c(c);
    require_in_field(f.field(), c, "c");
    require_in_field(f.field(), a, "a");
    guard(f.field().degree(), kRowMaxDegree, opts.force, "c-BCT row sweep");
    SpectrumTable t = blank(f, TableKind::cbct_row, c, a);
    const std::uint32_t q = f.size();
    const auto parts = parallel_chunks(q, opts.threads, std::vector<std::uint64_t>(q, 0),
                                       [&](std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& acc) {
                                           cbct_sweep(f, c, a, begin, end, acc);
                                       });
    for (const auto& part : parts)
        for (std::uint32_t b = 0; b < q; ++b) t.counts[b] += part[b];
    return t;
}

SpectrumTable cbct_full(const SBox& f, Element c, const SweepOptions& opts) {
    require_nonzero_c(c);
    require_in_field(f.field(), c, "c");
    guard(f.field().degree(), kFullTableMaxDegree, opts.force, "full c-BCT");
    SpectrumTable t = blank(f, TableKind::cbct_full, c, std::nullopt);
    const std::uint32_t q = f.size();
    parallel_chunks(q, opts.threads, 0, [&](std::uint64_t begin, std::uint64_t end, int&) {
        for (std::uint64_t a = begin; a < end; ++a)
            cbct_sweep(f, c, Element{static_cast<std::uint32_t>(a)}, 0, q,
                       std::span<std::uint64_t>(t.counts.data() + a * q, q));
    });
    return t;
}

std::uint64_t cbct_uniformity(const SBox& f, Element c, bool power_shortcut, const SweepOptions& opts) {
    if (power_shortcut) {
        if (!f.power_exponent()) throw UsageError("the a = 1 shortcut needs a power map");
        return uniformity(cbct_brute(f, c, Field::one(), opts));
    }
    return uniformity(cbct_full(f, c, opts));
}

DdtWeilEvaluator::DdtWeilEvaluator(std::shared_ptr<const Field> field, std::uint64_t d, Element c)
    : field_(std::move(field)), c_(c) {
    require_nonzero_c(c);
    const Field& fd = *field_;
    require_in_field(fd, c, "c");
    guard(fd.degree(), kFullTableMaxDegree, false, "c-DDT/Weil identity");
    const SBox f = SBox::power(field_, d);
    const std::uint32_t q = fd.size();

    // S_{alpha,beta} = sum_y h_alpha(y) chi1(beta y), h_alpha(y) = sum_{F(x+1)=y} chi1(alpha F(x)).
    s_.assign(static_cast<std::size_t>(q) * q, 0);
    std::vector<std::int64_t> h(q);
    for (std::uint32_t alpha = 0; alpha < q; ++alpha) {
        std::fill(h.begin(), h.end(), 0);
        for (std::uint32_t x = 0; x < q; ++x)
            h[f(Element{x ^ 1u}).bits] += chi1(fd, fd.mul(Element{alpha}, f(Element{x})));
        fast_walsh_hadamard(h);
        for (std::uint32_t beta = 0; beta < q; ++beta)
            s_[static_cast<std::size_t>(alpha) * q + beta] = h[fd.trace_functional(Element{beta})];
    }

    // sum_w cDelta(w, b) = sum_x #{z : F(z) = b + c F(x)}
    std::vector<std::uint64_t> preimages(q, 0);
    for (std::uint32_t z = 0; z < q; ++z) ++preimages[f(Element{z}).bits];
    auto columns = [&](Element m) {
        std::vector<std::uint64_t> out(q, 0);
        for (std::uint32_t x = 0; x < q; ++x) {
            const std::uint32_t mf = fd.mul(m, f(Element{x})).bits;
            for (std::uint32_t b = 0; b < q; ++b) out[b] += preimages[b ^ mf];
        }
        return out;
    };
    ddt_columns_c_ = columns(c);
    ddt_columns_cinv_ = columns(fd.inv(c));
}

std::int64_t DdtWeilEvaluator::evaluate(Element b) const {
    const Field& fd = *field_;
    if (b.is_zero()) throw UsageError("the c-DDT/Weil identity needs b != 0");
    require_in_field(fd, b, "b");
    const auto q = static_cast<std::int64_t>(fd.size());
    const Element cinv = fd.inv(c_);
    std::int64_t products = 0;
    for (std::uint32_t alpha = 1; alpha < fd.size(); ++alpha) {
        const std::int64_t* srow = s_.data() + static_cast<std::size_t>(alpha) * fd.size();
        const std::int64_t* srow2 = s_.data() + static_cast<std::size_t>(fd.mul(c_, Element{alpha}).bits) * fd.size();
        for (std::uint32_t beta = 1; beta < fd.size(); ++beta) {
            const std::int64_t sign = chi1(fd, fd.mul(b, Element{alpha ^ beta}));
            products += sign * srow[beta] * srow2[fd.mul(cinv, Element{beta}).bits];
        }
    }
    const auto ddt_sum = static_cast<std::int64_t>(ddt_columns_c_[b.bits] + ddt_columns_cinv_[b.bits]);
    const std::int64_t numerator = q * ddt_sum - q * q + products;
    if (numerator % (q * q) != 0)
        throw ConsistencyError("c-DDT/Weil identity: numerator " + std::to_string(numerator) +
                               " not divisible by q^2 at b = " + fd.format(b));
    return numerator / (q * q);
}

std::vector<std::int64_t> DdtWeilEvaluator::row() const {
    std::vector<std::int64_t> out(field_->size(), 0);
    for (std::uint32_t b = 1; b < field_->size(); ++b) out[b] = evaluate(Element{b});
    return out;
}

std::int64_t cbct_via_ddt_weil(const Field& field, std::uint64_t d, Element c, Element b) {
    auto copy = std::make_shared<const Field>(field);
    return DdtWeilEvaluator(copy, d, c).evaluate(b);
}

std::vector<std::uint64_t> entry_set(const SpectrumTable& table, bool include_b_zero) {
    std::set<std::uint64_t> values;
    for_each_cell(table, include_b_zero, [&](std::uint64_t v) { values.insert(v); });
    return {values.begin(), values.end()};
}

std::uint64_t uniformity(const SpectrumTable& table) {
    std::uint64_t best = 0;
    const bool all_b = table.kind == TableKind::cddt;
    for_each_cell(table, all_b, [&](std::uint64_t v) { best = std::max(best, v); });
    return best;
}

std::string to_csv(const SpectrumTable& t) {
    std::ostringstream os;
    const std::uint32_t q = t.q();
    if (t.is_full()) {
        os << "a,b,count\n";
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                os << format_element(t.n, Element{a}) << ',' << format_element(t.n, Element{b}) << ','
                   << t.counts[static_cast<std::uint64_t>(a) * q + b] << '\n';
    } else {
        os << "b,count\n";
        for (std::uint32_t b = 0; b < q; ++b) os << format_element(t.n, Element{b}) << ',' << t.counts[b] << '\n';
    }
    return os.str();
}

std::string to_json(const SpectrumTable& t) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(t.kind);
    j["n"] = t.n;
    j["poly"] = hex_string(t.poly);
    j["c"] = format_element(t.n, t.c);
    j["a"] = t.a ? nlohmann::ordered_json(format_element(t.n, *t.a)) : nlohmann::ordered_json(nullptr);
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    const std::uint32_t q = t.q();
    if (t.is_full()) {
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                counts[format_element(t.n, Element{a}) + "," + format_element(t.n, Element{b})] =
                    t.counts[static_cast<std::uint64_t>(a) * q + b];
    } else {
        for (std::uint32_t b = 0; b < q; ++b) counts[format_element(t.n, Element{b})] = t.counts[b];
    }
    j["counts"] = std::move(counts);
    j["uniformity"] = uniformity(t);
    j["entry_set"] = entry_set(t, true);
    return j.dump();
}

SpectrumTable table_from_json(std::string_view json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& ex) {
        throw UsageError(std::string("table JSON: ") + ex.what());
    }
    for (const char* key : {"kind", "n", "poly", "c", "a", "counts"})
        if (!j.contains(key)) throw UsageError(std::string("table JSON: missing key ") + key);

    SpectrumTable t;
    try {
        t.kind = table_kind_from_string(j["kind"].get<std::string>());
        t.n = j["n"].get<int>();
        if (t.n < Field::kMinDegree || t.n > Field::kMaxDegree) throw UsageError("table JSON: n out of range");
        const auto poly = j["poly"].get<std::string>();
        t.poly = parse_hex(poly, 31, "poly").bits;
        t.c = parse_hex(j["c"].get<std::string>(), t.n, "c");
        if (!j["a"].is_null()) t.a = parse_hex(j["a"].get<std::string>(), t.n, "a");
        const std::uint64_t q = t.q();
        t.counts.assign(t.a ? q : q * q, 0);
        std::vector<bool> seen(t.counts.size(), false);
        for (const auto& [key, value] : j["counts"].items()) {
            std::uint64_t index = 0;
            if (t.a) {
                index = parse_hex(key, t.n, "b").bits;
            } else {
                const auto comma = key.find(',');
                if (comma == std::string::npos) throw UsageError("table JSON: full-table key needs 'a,b'");
                index = parse_hex(std::string_view(key).substr(0, comma), t.n, "a").bits * q +
                        parse_hex(std::string_view(key).substr(comma + 1), t.n, "b").bits;
            }
            if (seen[index]) throw UsageError("table JSON: duplicate key " + key);
            seen[index] = true;
            t.counts[index] = value.get<std::uint64_t>();
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            throw UsageError("table JSON: counts do not cover every index");
    } catch (const nlohmann::json::exception& ex) {
        throw UsageError(std::string("table JSON: ") + ex.what());
    }
    if (j.contains("uniformity") && j["uniformity"].get<std::uint64_t>() != uniformity(t))
        throw UsageError("table JSON: stored uniformity disagrees with counts");
    if (j.contains("entry_set") && j["entry_set"].get<std::vector<std::uint64_t>>() != entry_set(t, true))
        throw UsageError("table JSON: stored entry_set disagrees with counts");
    return t;
}

}  // namespace goldbct
