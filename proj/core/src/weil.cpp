#include "goldbct/weil.hpp"

#include "goldbct/errors.hpp"

namespace goldbct {
namespace {

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

}  // namespace

void fast_walsh_hadamard(std::span<std::int64_t> values) {
    const std::size_t len = values.size();
    if ((len & (len - 1)) != 0) throw UsageError("Walsh-Hadamard length must be a power of two");
    for (std::size_t half = 1; half < len; half <<= 1) {
        for (std::size_t block = 0; block < len; block += 2 * half) {
            for (std::size_t i = block; i < block + half; ++i) {
                const std::int64_t a = values[i];
                const std::int64_t b = values[i + half];
                values[i] = a + b;
                values[i + half] = a - b;
            }
        }
    }
}

WeilResult weil_brute(const Field& field, Element u, Element v, int k) {
    const auto d = static_cast<std::int64_t>((std::uint64_t{1} << k) + 1);
    std::int64_t sum = 0;
    for (std::uint32_t i = 0; i < field.size(); ++i) {
        const Element x{i};
        sum += chi1(field, field.mul(u, field.pow(x, d)) + field.mul(v, x));
    }
    return {sum, SumMethod::brute, {}};
}

std::vector<std::int64_t> weil_brute_row(const Field& field, Element u, int k) {
    const auto d = static_cast<std::int64_t>((std::uint64_t{1} << k) + 1);
    std::vector<std::int64_t> spectrum(field.size());
    for (std::uint32_t i = 0; i < field.size(); ++i)
        spectrum[i] = chi1(field, field.mul(u, field.pow(Element{i}, d)));
    fast_walsh_hadamard(spectrum);
    std::vector<std::int64_t> out(field.size());
    for (std::uint32_t v = 0; v < field.size(); ++v) out[v] = spectrum[field.trace_functional(Element{v})];
    return out;
}

WeilClosedForm::WeilClosedForm(const Field& field, int k, WeilFormula formula)
    : field_(field),
      params_(GoldParams::make(field.degree(), k)),
      formula_(formula),
      l_one_(build_lu(field, Field::one(), k)) {
    if (params_.ratio_odd) root_exponent_ = inverse_exponent(params_.exponent(), params_.n);
}

WeilResult WeilClosedForm::evaluate(Element u, Element v) const { return evaluate_with(u, v, nullptr); }

std::vector<WeilResult> WeilClosedForm::row(Element u) const {
    std::vector<WeilResult> out(field_.size());
    if (!u.is_zero() && !params_.ratio_odd) {
        const BinaryLinearMap lu = build_lu(field_, u, params_.k);
        for (std::uint32_t v = 0; v < field_.size(); ++v) out[v] = evaluate_with(u, Element{v}, &lu);
    } else {
        for (std::uint32_t v = 0; v < field_.size(); ++v) out[v] = evaluate_with(u, Element{v}, nullptr);
    }
    return out;
}

WeilResult WeilClosedForm::evaluate_with(Element u, Element v, const BinaryLinearMap* lu) const {
    if (u.is_zero()) {
        if (v.is_zero()) return {static_cast<std::int64_t>(field_.size()), SumMethod::closed, "L23-1-zero"};
        return {0, SumMethod::closed, "orth"};
    }
    return params_.ratio_odd ? odd_ratio(u, v) : even_ratio(u, v, lu);
}

WeilResult WeilClosedForm::odd_ratio(Element u, Element v) const {
    const int n = params_.n, e = params_.e;
    if (v.is_zero()) return {0, SumMethod::closed, "L23-1-nonzero"};

    // S(u, v) = S(1, v / gamma) with gamma^(2^k+1) = u.
    const Element gamma = field_.pow(u, static_cast<std::int64_t>(root_exponent_));
    const Element w = field_.mul(v, field_.inv(gamma));
    if (field_.rel_trace(w, e) != Field::one()) return {0, SumMethod::closed, "L24-not1"};

    std::int64_t value = jacobi_2(n / e) == 1 || e % 2 == 0 ? pow2((n + e) / 2) : -pow2((n + e) / 2);
    if (formula_ == WeilFormula::corrected) {
        // 1 + w = x0^(2^k) + x0^(2^-k); completing the square picks up chi1(x0^d + x0).
        const auto x0 = l_one_.particular_solution(field_.frobenius(Field::one() + w, params_.k));
        if (!x0) throw ConsistencyError("L_1(x) = (1+w)^(2^k) unsolvable although Tr_e(w) = 1");
        const auto d = static_cast<std::int64_t>(params_.exponent());
        value *= chi1(field_, field_.pow(*x0, d) + *x0);
    }
    return {value, SumMethod::closed, "L24-tr1"};
}

WeilResult WeilClosedForm::even_ratio(Element u, Element v, const BinaryLinearMap* lu) const {
    const int e = params_.e;
    const int m = *params_.m;
    const std::int64_t sign = (m / e) % 2 == 0 ? 1 : -1;  // (-1)^(m/e)
    const bool residue = field_.is_gold_residue(u, e);

    if (v.is_zero()) {
        if (residue) return {-sign * pow2(m + e), SumMethod::closed, "L23-2-res"};
        return {sign * pow2(m), SumMethod::closed, "L23-2-nonres"};
    }

    std::optional<BinaryLinearMap> local;
    if (lu == nullptr) lu = &local.emplace(build_lu(field_, u, params_.k));
    const auto x_u = lu->particular_solution(field_.frobenius(v, params_.k));
    const auto d = static_cast<std::int64_t>(params_.exponent());

    if (!residue) {
        if (!x_u) throw ConsistencyError("L_u is a permutation for a non-residue u but the solve failed");
        return {sign * pow2(m) * chi1(field_, field_.mul(u, field_.pow(*x_u, d))), SumMethod::closed, "L25-1"};
    }
    if (!x_u) return {0, SumMethod::closed, "L25-2-unsolv"};

    const int character = chi1(field_, field_.mul(u, field_.pow(*x_u, d)));
    const bool trace_zero = field_.rel_trace(u, e).is_zero();
    const std::string_view tag = trace_zero ? "L25-2-solv-treq0" : "L25-2-solv-trne0";
    if (!trace_zero && formula_ == WeilFormula::as_printed)
        return {sign * pow2(m) * character, SumMethod::closed, tag};
    return {-sign * pow2(m + e) * character, SumMethod::closed, tag};
}

WeilResult weil_closed(const Field& field, Element u, Element v, int k, WeilFormula formula) {
    return WeilClosedForm(field, k, formula).evaluate(u, v);
}

ReducedPair reduce_pair(const Field& field, Element alpha, Element beta, int k) {
    return {alpha + beta, field.frobenius(beta, field.degree() - k) + beta};
}

WeilResult s_alpha_beta(const Field& field, Element alpha, Element beta, int k, SumMethod method,
                        WeilFormula formula) {
    if (method == SumMethod::brute) {
        const auto d = static_cast<std::int64_t>((std::uint64_t{1} << k) + 1);
        std::int64_t sum = 0;
        for (std::uint32_t i = 0; i < field.size(); ++i) {
            const Element x{i};
            sum += chi1(field, field.mul(alpha, field.pow(x, d)) + field.mul(beta, field.pow(x + Field::one(), d)));
        }
        return {sum, SumMethod::brute, {}};
    }
    const auto [a, b] = reduce_pair(field, alpha, beta, k);
    WeilResult r = weil_closed(field, a, b, k, formula);
    r.value *= chi1(field, beta);
    return r;
}

std::int64_t walsh(const SBox& sbox, Element a, Element b) {
    const Field& field = sbox.field();
    std::int64_t sum = 0;
    for (std::uint32_t i = 0; i < field.size(); ++i) {
        const Element x{i};
        sum += (field.abs_trace(field.mul(b, sbox(x))) ^ field.abs_trace(field.mul(a, x))) ? -1 : 1;
    }
    return sum;
}

std::vector<std::int64_t> walsh_spectrum(const SBox& sbox, Element b) {
    const Field& field = sbox.field();
    std::vector<std::int64_t> spectrum(field.size());
    for (std::uint32_t i = 0; i < field.size(); ++i) spectrum[i] = chi1(field, field.mul(b, sbox(Element{i})));
    fast_walsh_hadamard(spectrum);
    std::vector<std::int64_t> out(field.size());
    for (std::uint32_t a = 0; a < field.size(); ++a) out[a] = spectrum[field.trace_functional(Element{a})];
    return out;
}

}  // namespace goldbct
