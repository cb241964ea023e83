#include <doctest.h>

#include <algorithm>
#include <random>

#include "goldbct/errors.hpp"
#include "goldbct/sbox.hpp"
#include "goldbct/tables.hpp"
#include "oracles.hpp"

using namespace goldbct;

namespace {

SBox random_function(std::shared_ptr<const Field> f, unsigned seed, bool permutation) {
    std::vector<Element> t(f->size());
    std::mt19937 rng(seed);
    for (std::uint32_t x = 0; x < f->size(); ++x) t[x] = Element{permutation ? x : static_cast<std::uint32_t>(rng()) & (f->size() - 1)};
    if (permutation) std::shuffle(t.begin(), t.end(), rng);
    return SBox(f, std::move(t));
}

std::vector<std::uint32_t> bits(const SBox& s) {
    std::vector<std::uint32_t> out;
    for (Element e : s.table()) out.push_back(e.bits);
    return out;
}

}  // namespace

TEST_CASE("c-BCT rows match the definition") {
    auto f = std::make_shared<const Field>(4);
    const oracle::NaiveField ref{4, f->polynomial()};
    const std::vector<SBox> fns{SBox::power(f, 3), SBox::power(f, 5), SBox::power(f, 7),
                                random_function(f, 1, true), random_function(f, 2, false)};
    for (const SBox& fn : fns) {
        const auto tbl = bits(fn);
        for (std::uint32_t c = 1; c < 16; ++c)
            for (std::uint32_t a = 0; a < 16; ++a) {
                const auto expected = oracle::cbct_row(ref, tbl, c, a);
                const SpectrumTable row = cbct_brute(fn, Element{c}, Element{a});
                REQUIRE(row.counts == expected);
                REQUIRE(row.at(Element{5}) == oracle::cbct(ref, tbl, c, a, 5));
            }
    }
}

TEST_CASE("full tables agree with rows") {
    auto f = std::make_shared<const Field>(5);
    const SBox fn = random_function(f, 7, false);
    const Element c = f->parse("g^4");
    const SpectrumTable full = cbct_full(fn, c);
    CHECK(full.is_full());
    for (std::uint32_t a = 0; a < f->size(); ++a)
        for (std::uint32_t b = 0; b < f->size(); ++b)
            REQUIRE(full.at(Element{a}, Element{b}) == cbct_brute(fn, c, Element{a}).at(Element{b}));
}

TEST_CASE("c-DDT matches the definition") {
    auto f = std::make_shared<const Field>(5);
    const oracle::NaiveField ref{5, f->polynomial()};
    const SBox fn = random_function(f, 3, false);
    const auto tbl = bits(fn);
    for (std::uint32_t c : {1u, 7u, 30u}) {
        const SpectrumTable t = cddt(fn, Element{c});
        for (std::uint32_t a = 0; a < 32; ++a) {
            const SpectrumTable row = cddt_row(fn, Element{c}, Element{a});
            for (std::uint32_t b = 0; b < 32; ++b) {
                const auto expected = oracle::cddt(ref, tbl, c, a, b);
                REQUIRE(t.at(Element{a}, Element{b}) == expected);
                REQUIRE(row.at(Element{b}) == expected);
            }
        }
    }
}

TEST_CASE("sweeps do not depend on the thread partition") {
    auto f = std::make_shared<const Field>(7);
    const SBox fn = random_function(f, 11, false);
    const Element c = f->parse("g^9");
    const SpectrumTable one = cbct_brute(fn, c, Field::one(), {1, false});
    for (unsigned t : {2u, 3u, 5u, 16u}) CHECK(cbct_brute(fn, c, Field::one(), {t, false}) == one);
    const SpectrumTable ddt1 = cddt(fn, c, {1, false});
    CHECK(cddt(fn, c, {4, false}) == ddt1);
}

TEST_CASE("boomerang uniformity of Gold maps with c = 1") {
    auto f3 = std::make_shared<const Field>(3);
    CHECK(cbct_uniformity(SBox::power(f3, 3), Field::one(), true) == 2);
    auto f6 = std::make_shared<const Field>(6);
    CHECK(cbct_uniformity(SBox::power(f6, 5), Field::one(), true) == 4);
    auto f4 = std::make_shared<const Field>(4);
    for (std::uint64_t d : {3, 5, 7, 11}) {
        const SBox fn = SBox::power(f4, d);
        for (std::uint32_t c = 1; c < 16; ++c)
            REQUIRE(cbct_uniformity(fn, Element{c}, true) == cbct_uniformity(fn, Element{c}, false));
    }
    CHECK_THROWS_AS((void)cbct_uniformity(random_function(f4, 1, true), Field::one(), true), UsageError);
}

TEST_CASE("c-DDT and double Weil sum identity") {
    for (int n : {4, 6}) {
        auto f = std::make_shared<const Field>(n);
        for (std::uint64_t d : {3, 5, 7, 9, 11, 13, 17}) {
            const SBox fn = SBox::power(f, d);
            for (std::uint32_t c = 1; c < f->size(); c += (n == 6 ? 5 : 1)) {
                const auto row = DdtWeilEvaluator(f, d, Element{c}).row();
                const SpectrumTable brute = cbct_brute(fn, Element{c}, Field::one());
                for (std::uint32_t b = 1; b < f->size(); ++b) REQUIRE(row[b] == static_cast<std::int64_t>(brute.counts[b]));
            }
        }
    }
    const Field f(4);
    CHECK(cbct_via_ddt_weil(f, 3, f.parse("g^2"), Field::one()) ==
          static_cast<std::int64_t>(cbct_brute(SBox::power(std::make_shared<const Field>(4), 3), f.parse("g^2"), Field::one())
                                        .at(Field::one())));
}

TEST_CASE("entry sets and uniformity") {
    SpectrumTable t;
    t.kind = TableKind::cbct_row;
    t.n = 2;
    t.poly = 0x7;
    t.c = Field::one();
    t.a = Field::one();
    t.counts = {9, 0, 2, 2};
    CHECK(entry_set(t) == std::vector<std::uint64_t>{0, 2, 9});
    CHECK(entry_set(t, false) == std::vector<std::uint64_t>{0, 2});
    CHECK(uniformity(t) == 2);

    auto f = std::make_shared<const Field>(4);
    const SpectrumTable full = cbct_full(SBox::power(f, 3), f->parse("g"));
    std::uint64_t expected = 0;
    for (std::uint32_t a = 1; a < 16; ++a)
        for (std::uint32_t b = 1; b < 16; ++b) expected = std::max(expected, full.at(Element{a}, Element{b}));
    CHECK(uniformity(full) == expected);
}

TEST_CASE("serialization") {
    auto f = std::make_shared<const Field>(4);
    const SBox fn = SBox::power(f, 7);
    for (const SpectrumTable& t : {cbct_brute(fn, f->parse("g^3"), Field::one()), cbct_full(fn, f->parse("g^2")),
                                   cddt(fn, f->parse("g^2")), cddt_row(fn, Field::one(), f->parse("g"))}) {
        const std::string json = to_json(t);
        const SpectrumTable back = table_from_json(json);
        CHECK(back == t);
        CHECK(to_json(back) == json);
    }
    const std::string csv = to_csv(cbct_brute(fn, Field::one(), Field::one()));
    CHECK(csv.starts_with("b,count\n"));
    CHECK(to_csv(cbct_full(fn, Field::one())).starts_with("a,b,count\n"));
    CHECK_THROWS((void)table_from_json(R"({"kind":"cBCT-row"})"));
}

TEST_CASE("guardrails") {
    auto f = std::make_shared<const Field>(13);
    const SBox fn = SBox::power(f, 3);
    CHECK_THROWS_AS((void)cbct_full(fn, Field::one()), GuardrailError);
    auto g = std::make_shared<const Field>(17);
    CHECK_THROWS_AS((void)cddt(SBox::power(g, 3), Field::one()), GuardrailError);
    CHECK_THROWS_AS((void)cbct_brute(SBox::power(g, 3), Field::one(), Field::one()), GuardrailError);
}

TEST_CASE("Gold differential uniformity for small fields") {
    for (int n = 2; n <= 9; ++n) {
        auto f = std::make_shared<const Field>(n);
        for (int k = 1; k < n; ++k) {
            const GoldParams p = GoldParams::make(n, k);
            REQUIRE(c_differential_uniformity(SBox::power(f, p.exponent()), Field::one()) == (1u << p.e));
        }
    }
}
