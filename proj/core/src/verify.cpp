#include "goldbct/verify.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>

#include "goldbct/equiv.hpp"
#include "goldbct/errors.hpp"
#include "goldbct/field.hpp"
#include "goldbct/gold.hpp"
#include "goldbct/linearized.hpp"
#include "goldbct/weil.hpp"

namespace goldbct {
namespace {

std::string context(const Field& f) {
    return "n=" + std::to_string(f.degree()) + " poly=" + hex_string(f.polynomial());
}

class Checker {
public:
    explicit Checker(SuiteResult& r) : r_(r) {}

    template <class Describe>
    void expect(bool ok, Describe describe) {
        ++r_.checks;
        if (!ok && r_.passed) {
            r_.passed = false;
            r_.first_failure = describe();
        }
    }
    [[nodiscard]] bool failed() const { return !r_.passed; }

private:
    SuiteResult& r_;
};

void note(const VerifyOptions& opts, Suite s, int n) {
    if (opts.progress) opts.progress(std::string(to_string(s)) + ": n=" + std::to_string(n) + " done");
}

SuiteResult verify_field(const VerifyOptions& opts) {
    SuiteResult r{Suite::field, 0, true, {}, {}};
    Checker ck(r);
    for (int n = Field::kMinDegree; n <= std::min(opts.n_max, 16) && !ck.failed(); ++n) {
        const Field f(n);
        const std::uint32_t q = f.size();
        std::mt19937 rng(static_cast<unsigned>(n));
        std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
        for (int i = 0; i < 10000; ++i) {
            const Element a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
            ck.expect(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)) && f.mul(a, b) == f.mul(b, a) &&
                          f.mul(a, b + c) == f.mul(a, b) + f.mul(a, c),
                      [&] { return context(f) + ": field axioms fail at " + f.format(a) + ", " + f.format(b) + ", " + f.format(c); });
            if (!a.is_zero())
                ck.expect(f.mul(a, f.inv(a)) == Field::one(), [&] { return context(f) + ": a*inv(a) != 1 at " + f.format(a); });
        }
        if (n <= 12) {
            for (std::uint32_t x = 0; x < q; ++x) {
                const Element e{x};
                ck.expect(f.abs_trace(f.square(e)) == f.abs_trace(e),
                          [&] { return context(f) + ": Tr(x^2) != Tr(x) at " + f.format(e); });
                ck.expect(f.square(f.sqrt(e)) == e, [&] { return context(f) + ": sqrt(x)^2 != x at " + f.format(e); });
                if (x != 0)
                    ck.expect(f.exp(f.log(e)) == e, [&] { return context(f) + ": g^log(x) != x at " + f.format(e); });
                for (int e_div = 1; e_div <= n; ++e_div) {
                    if (n % e_div != 0) continue;
                    ck.expect(f.in_subfield(f.rel_trace(e, e_div), e_div),
                              [&] { return context(f) + ": Tr_" + std::to_string(e_div) + "(" + f.format(e) + ") not in subfield"; });
                    if (x != 0 && (n / e_div) % 2 == 0 && f.has_log_table())
                        ck.expect(f.gold_residue_by_power(e, e_div) == f.gold_residue_by_log(e, e_div),
                                  [&] { return context(f) + ": residue tests disagree at " + f.format(e); });
                }
            }
        }
        for (int k = 1; k < n; ++k) {
            const std::uint64_t direct = std::gcd((std::uint64_t{1} << k) + 1, (std::uint64_t{1} << n) - 1);
            ck.expect(gold_gcd(k, n) == direct, [&] { return "gold_gcd(" + std::to_string(k) + ", " + std::to_string(n) + ") wrong"; });
        }
        note(opts, Suite::field, n);
    }
    r.summary = r.passed ? "field arithmetic, traces, roots and residue tests agree" : "field check failed";
    return r;
}

SuiteResult verify_linearized(const VerifyOptions& opts) {
    SuiteResult r{Suite::linearized, 0, true, {}, {}};
    Checker ck(r);
    for (int n = 2; n <= std::min(opts.n_max, 10) && !ck.failed(); ++n) {
        const Field f(n);
        const std::uint32_t q = f.size();
        for (int k = 1; k < n && !ck.failed(); ++k) {
            for (std::uint32_t u = 1; u < q; ++u) {
                const BinaryLinearMap lu = build_lu(f, Element{u}, k);
                ck.expect(lu.kernel_size() == lu_kernel_size_closed_form(f, Element{u}, k), [&] {
                    return context(f) + " k=" + std::to_string(k) + " u=" + f.format(Element{u}) + ": kernel " +
                           std::to_string(lu.kernel_size()) + " vs closed form " +
                           std::to_string(lu_kernel_size_closed_form(f, Element{u}, k));
                });
                if (n > 8) continue;
                // solver against the exhaustive image
                std::vector<bool> in_image(q, false);
                for (std::uint32_t x = 0; x < q; ++x) in_image[lu.apply(Element{x}).bits] = true;
                for (std::uint32_t w = 0; w < q; ++w) {
                    const auto sol = lu.particular_solution(Element{w});
                    ck.expect(sol.has_value() == in_image[w] && (!sol || lu.apply(*sol) == Element{w}), [&] {
                        return context(f) + " k=" + std::to_string(k) + " u=" + f.format(Element{u}) +
                               ": solver wrong for w=" + f.format(Element{w});
                    });
                }
            }
        }
        note(opts, Suite::linearized, n);
    }
    r.summary = r.passed ? "kernel sizes match the trichotomy; solver matches exhaustive search" : "linearized check failed";
    return r;
}

SuiteResult verify_weil(const VerifyOptions& opts) {
    SuiteResult r{Suite::weil, 0, true, {}, {}};
    Checker ck(r);
    for (int n = 3; n <= std::min(opts.n_max, 10) && !ck.failed(); ++n) {
        const Field f(n);
        const std::uint32_t q = f.size();
        for (int k = 1; k < n && !ck.failed(); ++k) {
            const WeilClosedForm closed(f, k);
            for (std::uint32_t u = 0; u < q && !ck.failed(); ++u) {
                const auto brute = weil_brute_row(f, Element{u}, k);
                const auto row = closed.row(Element{u});
                for (std::uint32_t v = 0; v < q; ++v)
                    ck.expect(brute[v] == row[v].value, [&] {
                        return context(f) + " k=" + std::to_string(k) + " u=" + f.format(Element{u}) + " v=" +
                               f.format(Element{v}) + ": closed " + std::to_string(row[v].value) + " [" +
                               std::string(row[v].case_tag) + "] vs brute " + std::to_string(brute[v]);
                    });
            }
        }
        note(opts, Suite::weil, n);
    }
    r.summary = r.passed ? "all Weil closed forms match brute force" : "Weil closed form mismatch";
    return r;
}

SuiteResult verify_tables(const VerifyOptions& opts) {
    SuiteResult r{Suite::tables, 0, true, {}, {}};
    Checker ck(r);
    for (int n = 2; n <= std::min(opts.n_max, 12) && !ck.failed(); ++n) {
        auto f = std::make_shared<const Field>(n);
        for (int k = 1; k < n; ++k) {
            const SBox gold = SBox::power(f, (std::uint64_t{1} << k) + 1);
            const SpectrumTable t = cddt(gold, Field::one(), opts.sweep);
            const std::uint64_t expected = std::uint64_t{1} << std::gcd(k, n);
            ck.expect(c_differential_uniformity(t) == expected, [&] {
                return context(*f) + " k=" + std::to_string(k) + ": delta_{F,1} = " +
                       std::to_string(c_differential_uniformity(t)) + ", expected " + std::to_string(expected);
            });
        }
        if (n <= 6 && n >= 3) {
            // c-DDT/Weil identity at a few c for x^5 and x^7
            for (std::uint64_t d : {5u, 7u}) {
                const SBox p = SBox::power(f, d);
                for (const Element c : {Field::one(), Field::generator(), f->exp(3)}) {
                    const DdtWeilEvaluator ev(f, d, c);
                    const SpectrumTable row = cbct_brute(p, c, Field::one(), opts.sweep);
                    for (std::uint32_t b = 1; b < f->size(); ++b) {
                        const std::int64_t got = ev.evaluate(Element{b});
                        ck.expect(got == static_cast<std::int64_t>(row.counts[b]), [&] {
                            return context(*f) + " d=" + std::to_string(d) + " c=" + f->format(c) + " b=" +
                                   f->format(Element{b}) + ": identity " + std::to_string(got) + " vs brute " +
                                   std::to_string(row.counts[b]);
                        });
                    }
                }
            }
        }
        note(opts, Suite::tables, n);
    }
    r.summary = r.passed ? "Gold differential uniformity and the c-DDT/Weil identity hold" : "tables check failed";
    return r;
}

SuiteResult verify_gold(const VerifyOptions& opts) {
    SuiteResult r{Suite::gold, 0, true, {}, {}};
    Checker ck(r);
    for (int n = 3; n <= std::min(opts.n_max, 6) && !ck.failed(); ++n) {
        auto f = std::make_shared<const Field>(n);
        for (int k = 1; k < n && !ck.failed(); ++k) {
            const SBox gold = SBox::power(f, (std::uint64_t{1} << k) + 1);
            auto classifier = std::make_shared<const PairClassifier>(f, k);
            for (std::uint32_t ci = 1; ci < f->size() && !ck.failed(); ++ci) {
                const Element c{ci};
                const GoldTheorem th = theorem_for(*f, c, classifier->params());
                const GoldEvaluator ev(classifier, th, c);
                const SpectrumTable row = cbct_brute(gold, c, Field::one(), opts.sweep);
                for (std::uint32_t b = 1; b < f->size(); ++b) {
                    const std::int64_t got = th == GoldTheorem::c1_odd
                                                 ? theorem_c1_odd(*f, Element{b}, classifier->params())
                                                 : ev.evaluate(Element{b});
                    ck.expect(got == static_cast<std::int64_t>(row.counts[b]), [&] {
                        return context(*f) + " k=" + std::to_string(k) + " c=" + f->format(c) + " b=" +
                               f->format(Element{b}) + " (" + std::string(to_string(th)) + "): closed " +
                               std::to_string(got) + " vs brute " + std::to_string(row.counts[b]);
                    });
                }
            }
        }
        note(opts, Suite::gold, n);
    }
    r.summary = r.passed ? "every Gold closed form matches the brute-force c-BCT" : "Gold closed form mismatch";
    return r;
}

SuiteResult verify_equiv(const VerifyOptions& opts) {
    SuiteResult r{Suite::equiv, 0, true, {}, {}};
    Checker ck(r);
    if (opts.n_max < 6) {
        r.summary = "skipped: needs n-max >= 6";
        return r;
    }
    const Table1Report t1 = reproduce_table1(opts.sweep);
    for (const auto& m : t1.mismatches)
        ck.expect(false, [&] { return "table1 row g^" + std::to_string(m.exponent) + " column " + m.column + " differs"; });
    ck.expect(t1.byte_exact, [] { return std::string("table1 CSV is not byte-identical to the golden file"); });

    auto f = std::make_shared<const Field>(6);
    const SBox x17 = SBox::power(f, 17);
    for (std::uint32_t ci = 1; ci < f->size(); ++ci) {
        const auto rep = check_c_inverse_symmetry(x17, Element{ci}, opts.sweep);
        ck.expect(rep.preserved, [&] {
            return context(*f) + " c=" + f->format(Element{ci}) + ": c-inverse symmetry fails at a=" +
                   f->format(rep.witness->a) + " b=" + f->format(rep.witness->b);
        });
    }
    const SBox l(f, [&](Element x) { return f->frobenius(x, 2) + f->mul(Field::generator(), x); });
    const auto out = check_output_composition(x17, l, Field::generator(), opts.sweep);
    ck.expect(!out.preserved, [&] { return context(*f) + ": output composition unexpectedly preserved the entry set"; });
    note(opts, Suite::equiv, 6);
    r.summary = r.passed ? "GF(2^6) entry-set table reproduced; c-inverse symmetry holds; output composition changes the spectrum"
                         : "equivalence check failed";
    return r;
}

}  // namespace

std::string_view to_string(Suite s) {
    switch (s) {
        case Suite::field: return "field";
        case Suite::linearized: return "linearized";
        case Suite::weil: return "weil";
        case Suite::tables: return "tables";
        case Suite::gold: return "gold";
        case Suite::equiv: return "equiv";
        case Suite::all: return "all";
    }
    return "?";
}

Suite suite_from_string(std::string_view text) {
    for (Suite s : {Suite::field, Suite::linearized, Suite::weil, Suite::tables, Suite::gold, Suite::equiv, Suite::all})
        if (to_string(s) == text) return s;
    throw UsageError("unknown suite '" + std::string(text) + "'");
}

std::vector<SuiteResult> run_verify(Suite suite, const VerifyOptions& opts) {
    if (opts.n_max < 2) throw UsageError("n-max must be at least 2");
    std::vector<SuiteResult> out;
    auto want = [&](Suite s) { return suite == Suite::all || suite == s; };
    if (want(Suite::field)) out.push_back(verify_field(opts));
    if (want(Suite::linearized)) out.push_back(verify_linearized(opts));
    if (want(Suite::weil)) out.push_back(verify_weil(opts));
    if (want(Suite::tables)) out.push_back(verify_tables(opts));
    if (want(Suite::gold)) out.push_back(verify_gold(opts));
    if (want(Suite::equiv)) out.push_back(verify_equiv(opts));
    return out;
}

}  // namespace goldbct
