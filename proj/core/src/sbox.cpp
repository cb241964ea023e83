#include "goldbct/sbox.hpp"

#include <charconv>
#include <string>

#include "goldbct/errors.hpp"

namespace goldbct {

SBox::SBox(std::shared_ptr<const Field> field, std::vector<Element> table)
    : field_(std::move(field)), table_(std::move(table)) {
    if (!field_) throw UsageError("SBox needs a field");
    if (table_.size() != field_->size())
        throw UsageError("SBox table has " + std::to_string(table_.size()) + " entries, field has " +
                         std::to_string(field_->size()));
    std::vector<bool> seen(table_.size(), false);
    permutation_ = true;
    for (Element y : table_) {
        if (!field_->contains(y)) throw UsageError("SBox entry " + field_->format(y) + " outside the field");
        if (seen[y.bits]) permutation_ = false;
        seen[y.bits] = true;
    }
}

SBox::SBox(std::shared_ptr<const Field> field, const std::function<Element(Element)>& fn)
    : SBox(field, [&] {
          std::vector<Element> t(field->size());
          for (std::uint32_t x = 0; x < field->size(); ++x) t[x] = fn(Element{x});
          return t;
      }()) {}

SBox SBox::power(std::shared_ptr<const Field> field, std::uint64_t d) {
    if (d < 1) throw UsageError("power map exponent must be >= 1");
    const Field& f = *field;
    SBox box(field, [&](Element x) { return f.pow(x, static_cast<std::int64_t>(d)); });
    box.exponent_ = d;
    return box;
}

SBox SBox::compose(const SBox& inner) const {
    if (!(*field_ == inner.field())) throw UsageError("composing tables over different fields");
    std::vector<Element> t(table_.size());
    for (std::size_t x = 0; x < t.size(); ++x) t[x] = table_[inner.table_[x].bits];
    return SBox(field_, std::move(t));
}

SBox power_sbox(std::shared_ptr<const Field> field, std::uint64_t d) { return SBox::power(std::move(field), d); }

}  // namespace goldbct

namespace goldbct {

SBox sbox_from_expression(std::shared_ptr<const Field> field, std::string_view expr) {
    std::string text;
    for (char ch : expr)
        if (ch != ' ') text += ch;
    if (text.empty()) throw UsageError("empty polynomial expression");

    struct Term {
        Element coef;
        std::int64_t exponent;
    };
    std::vector<Term> terms;
    std::string_view rest = text;
    while (true) {
        const auto plus = rest.find('+');
        std::string_view term = rest.substr(0, plus);
        if (term.empty()) throw UsageError("empty term in '" + std::string(expr) + "'");
        Term t{Field::one(), 0};
        const auto x = term.find('x');
        if (x == std::string_view::npos) {
            t.coef = field->parse(term);
        } else {
            std::string_view coef = term.substr(0, x);
            if (!coef.empty()) {
                if (coef.back() != '*') throw UsageError("expected '*' before x in term '" + std::string(term) + "'");
                t.coef = field->parse(coef.substr(0, coef.size() - 1));
            }
            std::string_view power = term.substr(x + 1);
            if (power.empty()) {
                t.exponent = 1;
            } else {
                if (!power.starts_with('^')) throw UsageError("expected '^' after x in term '" + std::string(term) + "'");
                power.remove_prefix(1);
                auto [ptr, ec] = std::from_chars(power.data(), power.data() + power.size(), t.exponent);
                if (ec != std::errc{} || ptr != power.data() + power.size() || t.exponent < 1)
                    throw UsageError("bad exponent in term '" + std::string(term) + "'");
            }
        }
        terms.push_back(t);
        if (plus == std::string_view::npos) break;
        rest.remove_prefix(plus + 1);
    }
    const Field& f = *field;
    return SBox(field, [&](Element v) {
        Element sum = Field::zero();
        for (const Term& t : terms) sum += f.mul(t.coef, t.exponent == 0 ? Field::one() : f.pow(v, t.exponent));
        return sum;
    });
}

}  // namespace goldbct
