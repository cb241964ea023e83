#include "goldbct/linearized.hpp"

#include <bit>
#include <numeric>
#include <random>

#include "goldbct/errors.hpp"

namespace goldbct {

std::vector<Element> SolutionSet::enumerate() const {
    std::vector<Element> out;
    if (!solvable) return out;
    out.reserve(size());
    for (std::uint64_t mask = 0; mask < size(); ++mask) {
        Element x = particular;
        for (std::size_t i = 0; i < kernel.size(); ++i)
            if ((mask >> i) & 1) x += kernel[i];
        out.push_back(x);
    }
    return out;
}

BinaryLinearMap::BinaryLinearMap(const Field& field, const std::function<Element(Element)>& fn)
    : n_(field.degree()) {
    columns_.resize(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) columns_[static_cast<std::size_t>(j)] = fn(Element{std::uint32_t{1} << j}).bits;

    auto check = [&](Element x) {
        if (apply(x) != fn(x))
            throw UsageError("map is not F_2-linear: matrix disagrees at " + field.format(x));
    };
    if (n_ <= 10) {
        for (Element x : field.elements()) check(x);
    } else {
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<std::uint32_t> pick(0, field.size() - 1);
        for (int i = 0; i < 1024; ++i) check(Element{pick(rng)});
    }
    eliminate();
}

BinaryLinearMap::BinaryLinearMap(int n, std::vector<std::uint32_t> columns)
    : n_(n), columns_(std::move(columns)) {
    if (static_cast<int>(columns_.size()) != n_) throw UsageError("column count differs from dimension");
    eliminate();
}

Element BinaryLinearMap::apply(Element x) const {
    std::uint32_t r = 0;
    for (std::uint32_t bits = x.bits; bits != 0; bits &= bits - 1)
        r ^= columns_[static_cast<std::size_t>(std::countr_zero(bits))];
    return Element{r};
}

void BinaryLinearMap::eliminate() {
    // Each incoming column is reduced by the earlier pivots in insertion order;
    // a later pivot is zero at every earlier pivot bit, so one pass suffices.
    for (int j = 0; j < n_; ++j) {
        std::uint32_t image = columns_[static_cast<std::size_t>(j)];
        std::uint32_t combo = std::uint32_t{1} << j;
        for (const Pivot& p : basis_) {
            if (image & p.bit) {
                image ^= p.image;
                combo ^= p.combo;
            }
        }
        if (image == 0) {
            kernel_.push_back(Element{combo});
        } else {
            basis_.push_back({image, combo, image & (~image + 1)});
        }
    }
}

std::optional<Element> BinaryLinearMap::particular_solution(Element w) const {
    std::uint32_t residue = w.bits;
    std::uint32_t x = 0;
    for (const Pivot& p : basis_) {
        if (residue & p.bit) {
            residue ^= p.image;
            x ^= p.combo;
        }
    }
    if (residue != 0) return std::nullopt;
    return Element{x};
}

SolutionSet BinaryLinearMap::solve_affine(Element w) const {
    SolutionSet s;
    if (auto x = particular_solution(w)) {
        s.solvable = true;
        s.particular = *x;
        s.kernel = kernel_;
    }
    return s;
}

BinaryLinearMap build_lu(const Field& field, Element u, int k) {
    if (u.is_zero()) throw UsageError("L_u with u = 0 is the zero map");
    const Element lead = field.frobenius(u, k);
    return BinaryLinearMap(field, [&](Element x) {
        return field.mul(lead, field.frobenius(x, 2 * k)) + field.mul(u, x);
    });
}

std::uint64_t lu_kernel_size_closed_form(const Field& field, Element u, int k) {
    if (u.is_zero()) throw UsageError("L_u with u = 0 is the zero map");
    const int n = field.degree();
    const int e = std::gcd(n, k);
    if ((n / e) % 2 == 1) return std::uint64_t{1} << e;
    return field.is_gold_residue(u, e) ? std::uint64_t{1} << (2 * e) : 1;
}

}  // namespace goldbct
