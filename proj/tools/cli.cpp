#include "cli.hpp"

#include <memory>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "goldbct/equiv.hpp"
#include "goldbct/errors.hpp"
#include "goldbct/field.hpp"
#include "goldbct/gold.hpp"
#include "goldbct/sbox.hpp"
#include "goldbct/tables.hpp"
#include "goldbct/verify.hpp"
#include "goldbct/weil.hpp"

namespace goldbct::cli {
namespace {

struct RunConfig {
    int n = 6;
    std::optional<int> k;
    std::optional<std::uint64_t> d;
    std::string poly;
    std::string func;
    std::string lin;
    std::string c = "1", a = "1", b, u = "1", v = "0", x, t;
    std::string method = "brute";
    std::string formula = "corrected";
    std::string out = "text";
    std::string suite = "all";
    std::string check = "c-inverse";
    int n_max = 6;
    unsigned threads = 0;
    bool force = false;
    bool full = false;
};

std::shared_ptr<const Field> make_field(const RunConfig& cfg) {
    if (cfg.poly.empty()) return std::make_shared<const Field>(cfg.n);
    std::string digits = cfg.poly;
    if (digits.starts_with("0x") || digits.starts_with("0X")) digits = digits.substr(2);
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(digits, &used, 16);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != digits.size()) throw UsageError("bad --poly '" + cfg.poly + "'");
    return std::make_shared<const Field>(cfg.n, static_cast<std::uint32_t>(value));
}

std::string set_text(const std::vector<std::uint64_t>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

int require_k(const RunConfig& cfg) {
    if (!cfg.k) throw UsageError("--k is required");
    return *cfg.k;
}

// The function under study: --func, else x^d, else the Gold map for --k.
SBox make_function(const std::shared_ptr<const Field>& f, const RunConfig& cfg) {
    if (!cfg.func.empty()) return sbox_from_expression(f, cfg.func);
    if (cfg.d) return SBox::power(f, *cfg.d);
    if (cfg.k) return SBox::power(f, GoldParams::make(f->degree(), *cfg.k).exponent());
    throw UsageError("give --func, --d or --k");
}

void emit_table(const SpectrumTable& t, const RunConfig& cfg, std::ostream& out) {
    if (cfg.out == "csv") {
        out << to_csv(t);
    } else if (cfg.out == "json") {
        out << to_json(t) << '\n';
    } else {
        out << to_string(t.kind) << " n=" << t.n << " poly=" << hex_string(t.poly)
            << " c=" << format_element(t.n, t.c);
        if (t.a) out << " a=" << format_element(t.n, *t.a);
        out << "\nuniformity " << uniformity(t) << "\nentry set " << set_text(entry_set(t, true))
            << "\nentry set (b != 0) " << set_text(entry_set(t, false)) << '\n';
    }
}

int cmd_field(const RunConfig& cfg, std::ostream& out) {
    const auto f = make_field(cfg);
    if (cfg.out == "json") {
        out << f->to_json() << '\n';
        return kPass;
    }
    out << "GF(2^" << f->degree() << ") poly=" << hex_string(f->polynomial()) << " q=" << f->size()
        << " generator=g order=" << f->order_of(Field::generator()) << '\n';
    if (!cfg.x.empty()) {
        const Element x = f->parse(cfg.x);
        out << "x=" << f->format(x) << " Tr(x)=" << f->abs_trace(x) << " sqrt(x)=" << f->format(f->sqrt(x))
            << " inv(x)=" << f->format(f->inv(x));
        if (!x.is_zero()) out << " log_g(x)=" << f->log(x);
        out << '\n';
    }
    return kPass;
}

int cmd_weil(const RunConfig& cfg, std::ostream& out) {
    const auto f = make_field(cfg);
    const int k = require_k(cfg);
    const Element u = f->parse(cfg.u), v = f->parse(cfg.v);
    WeilResult r;
    if (cfg.method == "brute") {
        r = weil_brute(*f, u, v, k);
    } else if (cfg.method == "closed") {
        r = weil_closed(*f, u, v, k, cfg.formula == "as-printed" ? WeilFormula::as_printed : WeilFormula::corrected);
    } else {
        throw UsageError("weil supports --method brute or closed");
    }
    if (cfg.out == "json") {
        nlohmann::ordered_json j;
        j["n"] = f->degree();
        j["poly"] = hex_string(f->polynomial());
        j["k"] = k;
        j["u"] = f->format(u);
        j["v"] = f->format(v);
        j["method"] = cfg.method;
        j["value"] = r.value;
        j["case_tag"] = std::string(r.case_tag);
        out << j.dump() << '\n';
    } else {
        out << "S(" << f->format(u) << ", " << f->format(v) << ") = " << r.value;
        if (!r.case_tag.empty()) out << " [" << r.case_tag << "]";
        out << '\n';
    }
    return kPass;
}

int cmd_ddt(const RunConfig& cfg, std::ostream& out) {
    const auto f = make_field(cfg);
    const SBox fn = make_function(f, cfg);
    const Element c = f->parse(cfg.c);
    const SweepOptions opts{cfg.threads, cfg.force};
    emit_table(cfg.full ? cddt(fn, c, opts) : cddt_row(fn, c, f->parse(cfg.a)), cfg, out);
    return kPass;
}

// The b = 0 cell, which lies outside the closed forms, counted directly.
std::uint64_t count_b_zero(const SBox& fn, Element c) {
    const Field& f = fn.field();
    const Element cinv = f.inv(c);
    std::uint64_t count = 0;
    for (std::uint32_t x = 0; x < f.size(); ++x)
        for (std::uint32_t y = 0; y < f.size(); ++y)
            if ((fn(Element{x}) + f.mul(c, fn(Element{y}))).is_zero() &&
                (fn(Element{x ^ 1u}) + f.mul(cinv, fn(Element{y ^ 1u}))).is_zero())
                ++count;
    return count;
}

int cmd_bct(const RunConfig& cfg, std::ostream& out) {
    const auto f = make_field(cfg);
    const Element c = f->parse(cfg.c);
    const SweepOptions opts{cfg.threads, cfg.force};
    if (cfg.method == "brute") {
        const SBox fn = make_function(f, cfg);
        if (cfg.full) {
            emit_table(cbct_full(fn, c, opts), cfg, out);
        } else {
            const SpectrumTable t = cbct_brute(fn, c, f->parse(cfg.a), opts);
            if (!cfg.b.empty() && cfg.out == "text") out << "B(a,b) = " << t.at(f->parse(cfg.b)) << '\n';
            else emit_table(t, cfg, out);
        }
        return kPass;
    }

    if (cfg.full) throw UsageError("--full is only available with --method brute");
    if (f->parse(cfg.a) != Field::one()) throw UsageError("closed, decomp and ddt-weil give the a = 1 row");
    if (!cfg.func.empty()) throw UsageError("closed, decomp and ddt-weil need a power map, not --func");
    if (c.is_zero()) throw UsageError("c must be nonzero");

    std::vector<std::int64_t> values(f->size(), 0);
    std::uint64_t d = 0;
    if (cfg.method == "ddt-weil") {
        if (!cfg.d && !cfg.k) throw UsageError("ddt-weil needs --d or --k");
        d = cfg.d ? *cfg.d : GoldParams::make(f->degree(), *cfg.k).exponent();
        values = DdtWeilEvaluator(f, d, c).row();
    } else {
        const GoldParams p = GoldParams::make(f->degree(), require_k(cfg));
        d = p.exponent();
        if (cfg.d && *cfg.d != d) throw UsageError("--d must equal 2^k+1 for the Gold closed forms");
        if (cfg.method == "closed") {
            const WeightTable wt = cfg.formula == "as-printed" ? WeightTable::as_printed : WeightTable::corrected;
            const GoldTheorem th = theorem_for(*f, c, p);
            if (th == GoldTheorem::c1_odd) {
                for (std::uint32_t b = 1; b < f->size(); ++b) values[b] = theorem_c1_odd(*f, Element{b}, p);
            } else {
                const GoldEvaluator ev(std::make_shared<const PairClassifier>(f, p.k), th, c, wt);
                for (std::uint32_t b = 1; b < f->size(); ++b) values[b] = ev.evaluate(Element{b});
            }
        } else if (cfg.method == "decomp") {
            const DecompositionEvaluator ev(f, p.k, c, SumMethod::closed);
            for (std::uint32_t b = 1; b < f->size(); ++b) values[b] = ev.evaluate(Element{b});
        } else {
            throw UsageError("unknown --method '" + cfg.method + "'");
        }
    }
    SpectrumTable t;
    t.kind = TableKind::cbct_row;
    t.n = f->degree();
    t.poly = f->polynomial();
    t.c = c;
    t.a = Field::one();
    t.counts.resize(f->size());
    for (std::uint32_t b = 1; b < f->size(); ++b) {
        if (values[b] < 0) throw ConsistencyError("negative c-BCT entry at b = " + f->format(Element{b}));
        t.counts[b] = static_cast<std::uint64_t>(values[b]);
    }
    if (f->degree() > kRowMaxDegree && !cfg.force)
        throw GuardrailError("the b = 0 cell is a q^2 sweep; n = " + std::to_string(f->degree()) + " exceeds the n <= " +
                             std::to_string(kRowMaxDegree) + " guardrail; pass --force to run it anyway");
    t.counts[0] = count_b_zero(SBox::power(f, d), c);
    if (!cfg.b.empty() && cfg.out == "text") out << "B(1,b) = " << t.at(f->parse(cfg.b)) << '\n';
    else emit_table(t, cfg, out);
    return kPass;
}

int cmd_table1(const RunConfig& cfg, std::ostream& out) {
    const Table1Report r = reproduce_table1(SweepOptions{cfg.threads, cfg.force});
    if (cfg.out == "json") {
        nlohmann::ordered_json j;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : r.computed)
            j["rows"].push_back({{"c", "g^" + std::to_string(row.exponent)}, {"f_set", row.f_set}, {"g_set", row.g_set}});
        j["mismatches"] = r.mismatches.size();
        j["byte_exact"] = r.byte_exact;
        out << j.dump() << '\n';
    } else {
        out << format_table1_csv(r.computed);
        for (const auto& m : r.mismatches)
            out << "MISMATCH c=g^" << m.exponent << " column " << (m.column == 'f' ? "x^17" : "x^5+g*x^17")
                << " computed " << set_text(m.computed) << " expected " << set_text(m.expected) << '\n';
        const std::size_t sets = 2 * r.computed.size();
        out << "table1: " << sets - r.mismatches.size() << "/" << sets << " sets match"
            << (r.byte_exact ? ", byte-exact against the golden file" : ", NOT byte-exact") << '\n';
    }
    return r.matches() ? kPass : kMismatch;
}

void emit_witness(const Field& f, const Witness& w, std::ostream& out) {
    out << "witness c=" << f.format(w.c) << " a=" << f.format(w.a) << " b=" << f.format(w.b) << " left=" << w.left
        << " right=" << w.right << '\n';
}

int cmd_equiv(const RunConfig& cfg, std::ostream& out) {
    const auto f = make_field(cfg);
    const SBox fn = make_function(f, cfg);
    const Element c = f->parse(cfg.c);
    const SweepOptions opts{cfg.threads, cfg.force};
    if (cfg.check == "translation") {
        const auto r = report_translation(fn, f->parse(cfg.t.empty() ? "1" : cfg.t), c, opts);
        out << "translation t=" << f->format(r.t) << ": entrywise " << (r.entrywise_equal ? "equal" : "different")
            << ", entry sets " << set_text(r.left_set) << " vs " << set_text(r.right_set) << " (informational)\n";
        return kPass;
    }
    EquivalenceReport r;
    if (cfg.check == "c-inverse") {
        r = check_c_inverse_symmetry(fn, c, opts);
    } else {
        if (cfg.lin.empty()) throw UsageError("--lin is required for input and output checks");
        const SBox l = sbox_from_expression(f, cfg.lin);
        if (cfg.check == "input") r = check_input_composition(fn, l, c, opts);
        else if (cfg.check == "output") r = check_output_composition(fn, l, c, opts);
        else throw UsageError("unknown --check '" + cfg.check + "'");
    }
    out << to_string(r.transformation) << ": " << (r.preserved ? "preserved" : "not preserved") << ", entry sets "
        << set_text(r.left_set) << " vs " << set_text(r.right_set) << '\n';
    if (r.witness) emit_witness(*f, *r.witness, out);
    // output-linear composition is allowed to change the spectrum
    if (r.transformation == Transformation::output_linear) return kPass;
    return r.preserved ? kPass : kMismatch;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    VerifyOptions opts;
    opts.n_max = cfg.n_max;
    opts.sweep = SweepOptions{cfg.threads, cfg.force};
    const auto results = run_verify(suite_from_string(cfg.suite), opts);
    bool ok = true;
    for (const auto& r : results) {
        out << to_string(r.suite) << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.checks << " checks) "
            << r.summary << '\n';
        if (!r.passed) out << "  first failure: " << r.first_failure << '\n';
        ok = ok && r.passed;
    }
    return ok ? kPass : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"c-DDT / c-BCT toolkit for GF(2^n) and the Gold function x^(2^k+1)", "goldbct"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto field_opts = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "extension degree")->check(CLI::Range(Field::kMinDegree, Field::kMaxDegree));
        sub->add_option("--poly", cfg.poly, "modulus as hex with the leading bit, e.g. 0x5B");
    };
    auto out_opt = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--out", cfg.out, "output format")->check(CLI::IsMember(std::move(formats)));
    };
    auto sweep_opts = [&](CLI::App* sub) {
        sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
        sub->add_flag("--force", cfg.force, "lift the size guardrails");
    };
    auto function_opts = [&](CLI::App* sub) {
        sub->add_option("--k", cfg.k, "Gold parameter, F = x^(2^k+1)");
        sub->add_option("--d", cfg.d, "power exponent, F = x^d");
        sub->add_option("--func", cfg.func, "polynomial such as 'x^5+g*x^17'");
    };

    auto* field = app.add_subcommand("field", "describe the field");
    field_opts(field);
    field->add_option("--x", cfg.x, "element to describe");
    out_opt(field, {"text", "json"});

    auto* weil = app.add_subcommand("weil", "Weil sum S(u, v)");
    field_opts(weil);
    weil->add_option("--k", cfg.k, "Gold parameter")->required();
    weil->add_option("--u", cfg.u, "element u");
    weil->add_option("--v", cfg.v, "element v");
    weil->add_option("--method", cfg.method)->check(CLI::IsMember({"brute", "closed"}));
    weil->add_option("--formula", cfg.formula)->check(CLI::IsMember({"corrected", "as-printed"}));
    out_opt(weil, {"text", "json"});

    auto* ddt = app.add_subcommand("ddt", "c-DDT row at --a, or the full table with --full");
    field_opts(ddt);
    function_opts(ddt);
    ddt->add_option("--c", cfg.c, "multiplier c");
    ddt->add_option("--a", cfg.a, "input difference");
    ddt->add_flag("--full", cfg.full, "every a");
    out_opt(ddt, {"text", "csv", "json"});
    sweep_opts(ddt);

    auto* bct = app.add_subcommand("bct", "c-BCT row at --a, or the full table with --full");
    field_opts(bct);
    function_opts(bct);
    bct->add_option("--c", cfg.c, "multiplier c");
    bct->add_option("--a", cfg.a, "input difference");
    bct->add_option("--b", cfg.b, "print only this entry (text output)");
    bct->add_option("--method", cfg.method)->check(CLI::IsMember({"brute", "closed", "decomp", "ddt-weil"}));
    bct->add_option("--formula", cfg.formula, "weight tables for --method closed")
        ->check(CLI::IsMember({"corrected", "as-printed"}));
    bct->add_flag("--full", cfg.full, "every a (brute force only)");
    out_opt(bct, {"text", "csv", "json"});
    sweep_opts(bct);

    auto* table1 = app.add_subcommand("table1", "reproduce the c-BCT entry sets of x^17 and x^5+g*x^17 over GF(2^6)");
    out_opt(table1, {"text", "json"});
    sweep_opts(table1);

    auto* equiv = app.add_subcommand("equiv", "c-BCT behaviour under c -> 1/c and linear compositions");
    field_opts(equiv);
    function_opts(equiv);
    equiv->add_option("--c", cfg.c, "multiplier c");
    equiv->add_option("--check", cfg.check)->check(CLI::IsMember({"c-inverse", "input", "output", "translation"}));
    equiv->add_option("--lin", cfg.lin, "linear permutation L, e.g. 'x^4+g*x'");
    equiv->add_option("--t", cfg.t, "translation for --check translation");
    sweep_opts(equiv);

    auto* verify = app.add_subcommand("verify", "cross-check closed forms against brute force");
    verify->add_option("--suite", cfg.suite)
        ->check(CLI::IsMember({"field", "linearized", "weil", "tables", "gold", "equiv", "all"}));
    verify->add_option("--n-max", cfg.n_max, "largest n to sweep")->check(CLI::Range(2, 24));
    sweep_opts(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        for (auto* sub : app.get_subcommands()) err << sub->help();
        return kUsage;
    }

    try {
        if (field->parsed()) return cmd_field(cfg, out);
        if (weil->parsed()) return cmd_weil(cfg, out);
        if (ddt->parsed()) return cmd_ddt(cfg, out);
        if (bct->parsed()) return cmd_bct(cfg, out);
        if (table1->parsed()) return cmd_table1(cfg, out);
        if (equiv->parsed()) return cmd_equiv(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
    } catch (const GuardrailError& e) {
        err << "guardrail: " << e.what() << '\n';
        return kGuardrail;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConstructionError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << '\n';
        return kMismatch;
    }
    return kUsage;
}

}  // namespace goldbct::cli
