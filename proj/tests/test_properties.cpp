#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "goldbct/equiv.hpp"
#include "goldbct/field.hpp"
#include "goldbct/tables.hpp"
#include "goldbct/weil.hpp"

using namespace goldbct;

TEST_CASE("field axioms on sampled triples") {
    for (int n = 2; n <= 16; ++n) {
        const Field f(n);
        std::mt19937 rng(100 + n);
        const std::uint32_t mask = f.size() - 1;
        for (int i = 0; i < 10000; ++i) {
            const Element a{static_cast<std::uint32_t>(rng()) & mask}, b{static_cast<std::uint32_t>(rng()) & mask}, c{static_cast<std::uint32_t>(rng()) & mask};
            REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            REQUIRE(f.mul(a, b) == f.mul(b, a));
            REQUIRE(f.mul(a, b + c) == f.mul(a, b) + f.mul(a, c));
            if (!a.is_zero()) REQUIRE(f.mul(a, f.inv(a)) == Field::one());
        }
    }
}

TEST_CASE("trace identities, n <= 10") {
    for (int n = 2; n <= 10; ++n) {
        const Field f(n);
        for (std::uint32_t x = 0; x < f.size(); ++x) {
            const Element e{x};
            REQUIRE(f.abs_trace(f.square(e)) == f.abs_trace(e));
            for (int d = 1; d <= n; ++d) {
                if (n % d != 0) continue;
                const Element t = f.rel_trace(e, d);
                REQUIRE(f.in_subfield(t, d));
                // Tr = Tr_{2^d -> 2} o Tr_{2^n -> 2^d}
                Element inner = Field::zero();
                for (int i = 0; i < d; ++i) inner += f.frobenius(t, i);
                REQUIRE(inner.bits == static_cast<std::uint32_t>(f.abs_trace(e)));
            }
        }
    }
}

TEST_CASE("additive character orthogonality") {
    for (int n = 2; n <= 8; ++n) {
        const Field f(n);
        for (std::uint32_t a = 0; a < f.size(); ++a) {
            std::int64_t s = 0;
            for (std::uint32_t x = 0; x < f.size(); ++x) s += chi1(f, f.mul(Element{a}, Element{x}));
            REQUIRE(s == (a == 0 ? static_cast<std::int64_t>(f.size()) : 0));
        }
    }
}

TEST_CASE("Weil sums are even and bounded") {
    for (int n : {5, 6, 7}) {
        const Field f(n);
        for (int k = 1; k < n; ++k)
            for (std::uint32_t u = 0; u < f.size(); ++u)
                for (std::int64_t v : weil_brute_row(f, Element{u}, k)) {
                    REQUIRE(v % 2 == 0);
                    REQUIRE(std::llabs(v) <= static_cast<std::int64_t>(f.size()));
                }
    }
}

TEST_CASE("c-BCT of a permutation through the shifted system") {
    // substituting x -> x + a, y -> y + a swaps the two equations and c with 1/c
    auto f = std::make_shared<const Field>(6);
    std::vector<Element> t(f->size());
    for (std::uint32_t x = 0; x < f->size(); ++x) t[x] = Element{x};
    std::shuffle(t.begin(), t.end(), std::mt19937(5));
    const SBox fn(f, t);
    for (std::uint32_t c = 1; c < f->size(); c += 9)
        for (std::uint32_t a = 1; a < f->size(); a += 13)
            CHECK(cbct_brute(fn, Element{c}, Element{a}).counts ==
                  cbct_brute(fn, f->inv(Element{c}), Element{a}).counts);
}
