#include <doctest.h>

#include <set>

#include "goldbct/errors.hpp"
#include "goldbct/linearized.hpp"
#include "oracles.hpp"

using namespace goldbct;

TEST_CASE("solver agrees with exhaustive search") {
    for (int n = 2; n <= 7; ++n) {
        const Field f(n);
        const oracle::NaiveField ref{n, f.polynomial()};
        for (int k = 1; k < n; ++k)
            for (std::uint32_t u = 1; u < f.size(); ++u) {
                const BinaryLinearMap lu = build_lu(f, Element{u}, k);
                std::vector<std::uint32_t> preimages(f.size(), 0);
                for (std::uint32_t x = 0; x < f.size(); ++x) {
                    const std::uint32_t y = ref.mul(ref.frob(u, k), ref.frob(x, 2 * k)) ^ ref.mul(u, x);
                    REQUIRE(lu.apply(Element{x}).bits == y);
                    ++preimages[y];
                }
                for (std::uint32_t w = 0; w < f.size(); ++w) {
                    const SolutionSet s = lu.solve_affine(Element{w});
                    REQUIRE(s.solvable == (preimages[w] > 0));
                    REQUIRE(s.size() == preimages[w]);
                    if (!s.solvable) continue;
                    REQUIRE(lu.apply(s.particular) == Element{w});
                    for (Element x : s.enumerate()) REQUIRE(lu.apply(x) == Element{w});
                }
            }
    }
}

TEST_CASE("n = 4, k = 1, u = 1: image of x^4 + x") {
    const Field f(4);
    const BinaryLinearMap l(f, [&](Element x) { return f.frobenius(x, 2) + x; });
    std::set<std::uint32_t> image;
    for (std::uint32_t x = 0; x < 16; ++x) image.insert(f.add(f.frobenius(Element{x}, 2), Element{x}).bits);
    CHECK(image.size() == 4);
    for (std::uint32_t w = 0; w < 16; ++w) CHECK(l.solve_affine(Element{w}).solvable == image.contains(w));
    CHECK(l.kernel_size() == 4);
}

TEST_CASE("trivial solutions") {
    const Field f(5);
    const BinaryLinearMap id(f, [](Element x) { return x; });
    CHECK(id.is_bijective());
    const SolutionSet s = id.solve_affine(Field::zero());
    CHECK(s.solvable);
    CHECK(s.particular == Field::zero());
    for (std::uint32_t w = 0; w < f.size(); ++w) CHECK(id.solve_affine(Element{w}).size() == 1);
}

TEST_CASE("particular solutions are reproducible") {
    const Field f(6);
    const BinaryLinearMap a = build_lu(f, f.parse("g^5"), 2);
    const BinaryLinearMap b(6, std::vector<std::uint32_t>(a.columns().begin(), a.columns().end()));
    for (std::uint32_t w = 0; w < f.size(); ++w) CHECK(a.particular_solution(Element{w}) == b.particular_solution(Element{w}));
}

TEST_CASE("non-linear input is rejected and u = 0 is a usage error") {
    const Field f(4);
    CHECK_THROWS_AS(BinaryLinearMap(f, [&](Element x) { return f.mul(x, x) + Field::one(); }), UsageError);
    CHECK_THROWS_AS((void)build_lu(f, Field::zero(), 1), UsageError);
}

TEST_CASE("kernel size trichotomy for small fields") {
    for (int n = 2; n <= 8; ++n) {
        const Field f(n);
        const oracle::NaiveField ref{n, f.polynomial()};
        for (int k = 1; k < n; ++k)
            for (std::uint32_t u = 1; u < f.size(); ++u)
                REQUIRE(lu_kernel_size_closed_form(f, Element{u}, k) == oracle::lu_kernel(ref, u, k));
    }
}
