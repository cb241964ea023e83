#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "goldbct/field.hpp"

namespace goldbct {

/// Solution set of an affine equation M x = w over F_2: empty, or the coset
/// particular + span(kernel).
struct SolutionSet {
    bool solvable = false;
    Element particular;
    std::vector<Element> kernel;

    [[nodiscard]] std::uint64_t size() const {
        return solvable ? std::uint64_t{1} << kernel.size() : 0;
    }
    /// Every solution, in the order of the binary counter over the kernel basis.
    [[nodiscard]] std::vector<Element> enumerate() const;
};

/// An F_2-linear map GF(2^n) -> GF(2^n) stored as an n x n bit matrix.
///
/// Column j is the image of y^j. Row reduction runs once at construction with
/// lowest-bit pivots, so solutions are reproducible.
class BinaryLinearMap {
public:
    /// Matrix of `fn`, which must be F_2-linear. The matrix is checked against
    /// `fn` on every input for n <= 10 and on 1024 seeded samples otherwise.
    BinaryLinearMap(const Field& field, const std::function<Element(Element)>& fn);
    /// Directly from columns; no linearity check is possible or needed.
    BinaryLinearMap(int n, std::vector<std::uint32_t> columns);

    [[nodiscard]] int dimension() const { return n_; }
    [[nodiscard]] std::span<const std::uint32_t> columns() const { return columns_; }
    [[nodiscard]] Element apply(Element x) const;

    [[nodiscard]] int rank() const { return static_cast<int>(basis_.size()); }
    [[nodiscard]] std::uint64_t kernel_size() const { return std::uint64_t{1} << (n_ - rank()); }
    [[nodiscard]] const std::vector<Element>& kernel_basis() const { return kernel_; }
    [[nodiscard]] bool is_bijective() const { return rank() == n_; }

    /// Solutions of map(x) = w. Unsolvability is a value, not an error.
    [[nodiscard]] SolutionSet solve_affine(Element w) const;
    /// Just the particular solution, or nullopt when map(x) = w has none.
    [[nodiscard]] std::optional<Element> particular_solution(Element w) const;

private:
    struct Pivot {
        std::uint32_t image;  // reduced image vector
        std::uint32_t combo;  // input bits producing it
        std::uint32_t bit;    // lowest set bit of image
    };
    void eliminate();

    int n_ = 0;
    std::vector<std::uint32_t> columns_;
    std::vector<Pivot> basis_;
    std::vector<Element> kernel_;
};

/// L_u(x) = u^(2^k) x^(2^(2k)) + u x. Throws UsageError for u = 0.
BinaryLinearMap build_lu(const Field& field, Element u, int k);

/// Kernel size of L_u predicted by the root-count trichotomy: 2^e when n/e
/// is odd, 2^(2e) for a gold residue when n/e is even, 1 otherwise.
std::uint64_t lu_kernel_size_closed_form(const Field& field, Element u, int k);

}  // namespace goldbct
