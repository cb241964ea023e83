#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "goldbct/field.hpp"

namespace goldbct {

/// Lookup table of a function F: GF(2^n) -> GF(2^n).
///
/// Shares ownership of its field. The permutation flag is computed once at
/// construction. Power maps remember their exponent, which licenses the a = 1
/// shortcut for boomerang uniformity.
class SBox {
public:
    SBox(std::shared_ptr<const Field> field, std::vector<Element> table);
    SBox(std::shared_ptr<const Field> field, const std::function<Element(Element)>& fn);

    /// x -> x^d with 0^d = 0. Requires d >= 1.
    static SBox power(std::shared_ptr<const Field> field, std::uint64_t d);

    [[nodiscard]] const Field& field() const { return *field_; }
    [[nodiscard]] const std::shared_ptr<const Field>& field_ptr() const { return field_; }
    [[nodiscard]] std::span<const Element> table() const { return table_; }
    [[nodiscard]] Element operator()(Element x) const { return table_[x.bits]; }
    [[nodiscard]] std::uint32_t size() const { return static_cast<std::uint32_t>(table_.size()); }
    [[nodiscard]] bool is_permutation() const { return permutation_; }
    [[nodiscard]] std::optional<std::uint64_t> power_exponent() const { return exponent_; }

    /// (this o inner)(x) = this(inner(x)).
    [[nodiscard]] SBox compose(const SBox& inner) const;

private:
    std::shared_ptr<const Field> field_;
    std::vector<Element> table_;
    bool permutation_ = false;
    std::optional<std::uint64_t> exponent_;
};

/// Table of a polynomial written as a sum of terms `coef*x^e`, `coef*x`,
/// `x^e`, `x` or `coef`, with coefficients in element syntax (`g^3`, `0x1F`,
/// `1`). Spaces are ignored. Example: "x^5+g*x^17". UsageError on bad input.
SBox sbox_from_expression(std::shared_ptr<const Field> field, std::string_view expr);

/// Convenience: power map table over a field. Same as SBox::power.
SBox power_sbox(std::shared_ptr<const Field> field, std::uint64_t d);

}  // namespace goldbct
