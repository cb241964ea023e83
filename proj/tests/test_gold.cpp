#include <doctest.h>

#include <algorithm>
#include <memory>
#include <set>
#include <string>

#include "goldbct/errors.hpp"
#include "goldbct/gold.hpp"
#include "goldbct/sbox.hpp"
#include "goldbct/tables.hpp"
#include "oracles.hpp"

using namespace goldbct;

namespace {

// Compares every theorem evaluator with the brute-force row for one field.
void check_all_c(int n, std::uint32_t c_step = 1) {
    auto f = std::make_shared<const Field>(n);
    for (int k = 1; k < n; ++k) {
        const GoldParams p = GoldParams::make(n, k);
        const SBox fn = SBox::power(f, p.exponent());
        auto cls = std::make_shared<const PairClassifier>(f, k);
        for (std::uint32_t c = 1; c < f->size(); c += (c == 1 ? 1 : c_step)) {
            const Element ce{c};
            const GoldTheorem th = theorem_for(*f, ce, p);
            const GoldEvaluator ev(cls, th, ce);
            const SpectrumTable brute = cbct_brute(fn, ce, Field::one());
            const ScaledBound bound = corollary_bound(*cls, th, ce);
            for (std::uint32_t b = 1; b < f->size(); ++b) {
                INFO("n=" << n << " k=" << k << " c=" << c << " b=" << b << " " << to_string(th));
                const std::int64_t v = ev.evaluate(Element{b});
                REQUIRE(v >= 0);
                REQUIRE(v == static_cast<std::int64_t>(brute.counts[b]));
                REQUIRE(bound.admits(v));
                if (th == GoldTheorem::c1_odd) {
                    REQUIRE(theorem_c1_odd(*f, Element{b}, p) == v);
                    if (n <= 6) REQUIRE(theorem_c1_odd_sum(*f, Element{b}, p) == v);
                    REQUIRE((v == 0 || v == (std::int64_t{1} << p.e)));
                }
            }
        }
    }
}

}  // namespace

TEST_CASE("theorem dispatch") {
    const Field f(6);
    const GoldParams odd = GoldParams::make(6, 2), even = GoldParams::make(6, 4);
    (void)even;
    CHECK(theorem_for(f, Field::one(), odd) == GoldTheorem::c1_odd);
    CHECK(theorem_for(f, Field::one(), GoldParams::make(6, 1)) == GoldTheorem::c1_even);
    CHECK(theorem_for(f, f.parse("g^21"), odd) == GoldTheorem::subfield_odd);  // g^21 lies in F_4
    CHECK(theorem_for(f, f.parse("g^21"), GoldParams::make(6, 3)) == GoldTheorem::general_even);
    CHECK(theorem_for(f, f.parse("g"), odd) == GoldTheorem::general_odd);
    CHECK(theorem_for(f, f.parse("g^9"), GoldParams::make(6, 3)) == GoldTheorem::subfield_even);  // g^9 in F_8
    CHECK_THROWS_AS((void)theorem_for(f, Field::zero(), odd), UsageError);
    auto fp = std::make_shared<const Field>(6);
    auto cls = std::make_shared<const PairClassifier>(fp, 2);
    CHECK_THROWS_AS(GoldEvaluator(cls, GoldTheorem::c1_odd, f.parse("g")), UsageError);
}

TEST_CASE("evaluators equal brute force, n = 3, 4, 5") {
    for (int n : {3, 4, 5}) check_all_c(n);
}

TEST_CASE("evaluators equal brute force, n = 6") { check_all_c(6); }

TEST_CASE("evaluators equal brute force, n = 8, and n = 9 on a sample of c") {
    check_all_c(8);
    check_all_c(9, 7);
}

TEST_CASE("one-shot theorem functions") {
    auto f = std::make_shared<const Field>(6);
    for (int k = 1; k < 6; ++k) {
        const GoldParams p = GoldParams::make(6, k);
        const SBox fn = SBox::power(f, p.exponent());
        for (const char* c : {"1", "g^21", "g^9", "g", "g^5"}) {
            const Element ce = f->parse(c);
            const SpectrumTable brute = cbct_brute(fn, ce, Field::one());
            for (std::uint32_t b : {1u, 7u, 33u}) {
                const GoldTheorem th = theorem_for(*f, ce, p);
                const std::int64_t expected = static_cast<std::int64_t>(brute.counts[b]);
                CHECK(gold_cbct_closed(*f, Element{b}, ce, p) == expected);
                switch (th) {
                    case GoldTheorem::c1_odd: CHECK(theorem_c1_odd(*f, Element{b}, p) == expected); break;
                    case GoldTheorem::c1_even: CHECK(theorem_c1_even(*f, Element{b}, p) == expected); break;
                    case GoldTheorem::subfield_odd: CHECK(theorem_subfield_odd(*f, Element{b}, ce, p) == expected); break;
                    case GoldTheorem::subfield_even: CHECK(theorem_subfield_even(*f, Element{b}, ce, p) == expected); break;
                    case GoldTheorem::general_odd: CHECK(theorem_general_odd(*f, Element{b}, ce, p) == expected); break;
                    case GoldTheorem::general_even: CHECK(theorem_general_even(*f, Element{b}, ce, p) == expected); break;
                }
            }
        }
        CHECK_THROWS_AS((void)theorem_general_odd(*f, Field::one(), Field::one(), p), UsageError);
    }
}

TEST_CASE("decomposition equals brute force with either Weil route") {
    for (auto [n, k] : {std::pair{4, 1}, {4, 2}, {5, 2}, {6, 2}, {6, 4}}) {
        auto f = std::make_shared<const Field>(n);
        const GoldParams p = GoldParams::make(n, k);
        const SBox fn = SBox::power(f, p.exponent());
        for (std::uint32_t c = 1; c < f->size(); c += 3) {
            const SpectrumTable brute = cbct_brute(fn, Element{c}, Field::one());
            const DecompositionEvaluator closed(f, k, Element{c}, SumMethod::closed);
            const DecompositionEvaluator direct(f, k, Element{c}, SumMethod::brute);
            for (std::uint32_t b = 1; b < f->size(); ++b) {
                REQUIRE(closed.evaluate(Element{b}) == static_cast<std::int64_t>(brute.counts[b]));
                REQUIRE(direct.evaluate(Element{b}) == static_cast<std::int64_t>(brute.counts[b]));
            }
            CHECK(decomposition_check(*f, Element{c}, Field::one(), p, SumMethod::closed) ==
                  static_cast<std::int64_t>(brute.counts[1]));
        }
    }
}

TEST_CASE("pair classification is a partition with well-defined refinements") {
    for (int n = 3; n <= 6; ++n) {
        auto f = std::make_shared<const Field>(n);
        const oracle::NaiveField ref{n, f->polynomial()};
        for (int k = 1; k < n; ++k) {
            const GoldParams p = GoldParams::make(n, k);
            const PairClassifier cls(f, k);
            const std::uint64_t d = p.exponent();
            for (std::uint32_t alpha = 0; alpha < f->size(); ++alpha)
                for (std::uint32_t beta = 0; beta < f->size(); ++beta) {
                    const SideClass& s = cls.side(Element{alpha}, Element{beta});
                    const std::uint32_t A = alpha ^ beta;
                    const std::uint32_t B = ref.frob(beta, n - k) ^ beta;
                    const PairSet coarse = A == 0 ? (B == 0 ? PairSet::A : PairSet::B) : (B == 0 ? PairSet::C : PairSet::D);
                    REQUIRE(s.coarse == coarse);
                    if (coarse != PairSet::D) continue;
                    if (p.ratio_odd) {
                        std::uint32_t gamma = 0;
                        for (std::uint32_t g = 1; g < f->size(); ++g)
                            if (ref.pow(g, d) == A) gamma = g;
                        const bool tr1 = ref.rel_trace(ref.mul(B, ref.inv(gamma)), p.e) == 1;
                        REQUIRE(s.fine == (tr1 ? PairSet::F : PairSet::E));
                        continue;
                    }
                    // all solutions of L_A(x) = B^(2^k); chi1(A x^d) must not depend on the choice
                    std::set<int> values;
                    const std::uint32_t rhs = ref.frob(B, k);
                    for (std::uint32_t x = 0; x < f->size(); ++x)
                        if ((ref.mul(ref.frob(A, k), ref.frob(x, 2 * k)) ^ ref.mul(A, x)) == rhs)
                            values.insert(ref.chi(ref.mul(A, ref.pow(x, d))));
                    const bool residue = oracle::lu_kernel(ref, A, k) > 1;
                    if (values.empty()) {
                        REQUIRE(s.fine == PairSet::J);
                        continue;
                    }
                    REQUIRE(values.size() == 1);
                    REQUIRE(s.factor == *values.begin());
                    if (!residue) REQUIRE(s.fine == PairSet::I);
                    else REQUIRE(s.fine == (ref.rel_trace(A, p.e) == 0 ? PairSet::L : PairSet::K));
                }
        }
    }
}

TEST_CASE("classify reports both sides") {
    auto f = std::make_shared<const Field>(6);
    const PairClassifier cls(f, 4);
    const PairClass pc = cls.classify(f->parse("g"), f->parse("g^2"), f->parse("g^3"));
    CHECK(pc.a_coef == f->parse("g") + f->parse("g^2"));
    CHECK(pc.a_coef_primed == f->mul(f->parse("g^3"), f->parse("g")) + f->mul(f->parse("g^-3"), f->parse("g^2")));
    CHECK_FALSE(pc.labels().empty());
    CHECK(pc.labels().find('\'') != std::string::npos);
    const PairClass one = classify_pair(*f, f->parse("g"), f->parse("g^2"), f->parse("g^3"), GoldParams::make(6, 4));
    CHECK(one.labels() == pc.labels());
    CHECK_THROWS_AS(PairClassifier(std::make_shared<const Field>(11), 1), GuardrailError);
}

TEST_CASE("corollary bounds with literal weights are reported, not asserted") {
    auto f = std::make_shared<const Field>(6);
    auto cls = std::make_shared<const PairClassifier>(f, 2);
    const ScaledBound b = corollary_bound(*cls, GoldTheorem::general_odd, f->parse("g"), WeightTable::as_printed);
    CHECK(b.scale > 0);
    auto cls_even = std::make_shared<const PairClassifier>(f, 1);
    CHECK_THROWS_AS((void)corollary_bound(*cls_even, GoldTheorem::general_even, f->parse("g"), WeightTable::as_printed),
                    UsageError);
}
