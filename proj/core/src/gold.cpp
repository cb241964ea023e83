#include "goldbct/gold.hpp"

#include <cstdlib>

#include "goldbct/errors.hpp"
#include "goldbct/linearized.hpp"

namespace goldbct {
namespace {

constexpr int kClassifierMaxDegree = 10;

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

// Everything the side classifier needs that depends only on (field, k).
struct SideContext {
    const Field& field;
    const GoldParams& params;
    std::int64_t d;
    std::uint64_t root_exponent = 0;  // n/e odd
    BinaryLinearMap l_one;

    SideContext(const Field& f, const GoldParams& p)
        : field(f), params(p), d(static_cast<std::int64_t>(p.exponent())), l_one(build_lu(f, Field::one(), p.k)) {
        if (p.ratio_odd) root_exponent = inverse_exponent(p.exponent(), p.n);
    }

    // Columns of L_A without the exhaustive linearity check build_lu performs.
    [[nodiscard]] BinaryLinearMap lu(Element a) const {
        const int n = params.n;
        const Element lead = field.frobenius(a, params.k);
        std::vector<std::uint32_t> cols(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            const Element y{std::uint32_t{1} << j};
            cols[static_cast<std::size_t>(j)] = (field.mul(lead, field.frobenius(y, 2 * params.k)) + field.mul(a, y)).bits;
        }
        return BinaryLinearMap(n, std::move(cols));
    }
};

ReducedPair coefficients(const Field& field, Element alpha, Element beta, int k) {
    return reduce_pair(field, alpha, beta, k);
}

SideClass classify_side(const SideContext& ctx, Element a, Element b, const BinaryLinearMap* la) {
    const Field& f = ctx.field;
    const int e = ctx.params.e;
    SideClass s;
    if (a.is_zero()) {
        s.coarse = s.fine = b.is_zero() ? PairSet::A : PairSet::B;
        return s;
    }
    if (b.is_zero()) {
        s.coarse = PairSet::C;
        s.fine = ctx.params.ratio_odd ? PairSet::C : (f.is_gold_residue(a, e) ? PairSet::H : PairSet::G);
        return s;
    }
    s.coarse = PairSet::D;
    if (ctx.params.ratio_odd) {
        const Element gamma = f.pow(a, static_cast<std::int64_t>(ctx.root_exponent));
        const Element v = f.mul(b, f.inv(gamma));
        if (f.rel_trace(v, e) != Field::one()) {
            s.fine = PairSet::E;
            return s;
        }
        const auto x0 = ctx.l_one.particular_solution(f.frobenius(Field::one() + v, ctx.params.k));
        if (!x0) throw ConsistencyError("L_1(x) = (1 + B/gamma)^(2^k) unsolvable on an F pair");
        s.fine = PairSet::F;
        s.x = *x0;
        s.factor = chi1(f, f.pow(*x0, ctx.d) + *x0);
        return s;
    }
    std::optional<BinaryLinearMap> local;
    if (la == nullptr) la = &local.emplace(ctx.lu(a));
    const auto xa = la->particular_solution(f.frobenius(b, ctx.params.k));
    const bool residue = f.is_gold_residue(a, e);
    if (!xa) {
        if (!residue) throw ConsistencyError("L_A is bijective for a non-residue A but the solve failed");
        s.fine = PairSet::J;
        return s;
    }
    s.x = *xa;
    s.factor = chi1(f, f.mul(a, f.pow(*xa, ctx.d)));
    if (!residue) s.fine = PairSet::I;
    else s.fine = f.rel_trace(a, e).is_zero() ? PairSet::L : PairSet::K;
    return s;
}

// Constants of the weight tables.
struct WeightContext {
    int n, e, m;
    std::int64_t sgn;  // (-1)^(m/e), n/e even
    std::int64_t jac;  // (2/(n/e))^e, n/e odd
    std::int64_t q2;
};

WeightContext weight_context(const GoldParams& p) {
    WeightContext w{};
    w.n = p.n;
    w.e = p.e;
    w.m = p.m.value_or(0);
    w.sgn = (!p.ratio_odd && (w.m / w.e) % 2 != 0) ? -1 : 1;
    w.jac = 1;
    if (p.ratio_odd && jacobi_2(p.n / p.e) == -1 && p.e % 2 == 1) w.jac = -1;
    w.q2 = pow2(2 * p.n);
    return w;
}

// Even-ratio D refinements grouped as the weight tables use them.
enum class DGroup { none, i, kl, j };

DGroup d_group(PairSet s, WeightTable wt) {
    switch (s) {
        case PairSet::I: return DGroup::i;
        case PairSet::K: return wt == WeightTable::corrected ? DGroup::kl : DGroup::i;
        case PairSet::L: return DGroup::kl;
        case PairSet::J: return DGroup::j;
        default: return DGroup::none;
    }
}

// Everything a weight table reads about one pair.
struct PairView {
    const SideClass& s;
    const SideClass& p;
    int chi_beta;  // chi1((1 + c^-1) beta)
    Element a_coef, a_coef_primed;
};

std::int64_t weight_c1_odd(const WeightContext& w, const PairView& v, WeightTable wt) {
    if (v.s.fine == PairSet::A && v.p.fine == PairSet::A) return w.q2;
    if (v.s.fine == PairSet::F && v.p.fine == PairSet::F)
        return pow2(w.n + w.e) * (wt == WeightTable::corrected ? v.s.factor * v.p.factor : 1);
    return 0;
}

std::int64_t weight_c1_even(const WeightContext& w, const PairView& v, WeightTable wt) {
    if (v.s.fine != v.p.fine) throw ConsistencyError("c = 1 pair classified differently on its two sides");
    switch (v.s.fine) {
        case PairSet::A: return w.q2;
        case PairSet::G:
        case PairSet::I: return pow2(w.n);
        case PairSet::K: return wt == WeightTable::corrected ? pow2(w.n + 2 * w.e) : pow2(w.n);
        case PairSet::H:
        case PairSet::L: return pow2(w.n + 2 * w.e);
        default: return 0;
    }
}

std::int64_t weight_subfield_odd(const WeightContext& w, const PairView& v, WeightTable wt) {
    if (v.s.fine == PairSet::A && v.p.fine == PairSet::A) return w.q2 * v.chi_beta;
    if (v.s.fine == PairSet::F && v.p.fine == PairSet::F)
        return pow2(w.n + w.e) * v.chi_beta * (wt == WeightTable::corrected ? v.s.factor * v.p.factor : 1);
    return 0;
}

// C and A rows shared by the two even-ratio c != 1 tables.
std::optional<std::int64_t> weight_ac_block(const WeightContext& w, PairSet s, PairSet p, int chi_beta) {
    const std::int64_t n = w.n, e = w.e, m = w.m;
    auto is = [](PairSet x, PairSet y) { return x == y; };
    if (is(s, PairSet::A) && is(p, PairSet::A)) return w.q2 * chi_beta;
    if ((is(s, PairSet::A) && is(p, PairSet::G)) || (is(s, PairSet::G) && is(p, PairSet::A)))
        return w.sgn * pow2(static_cast<int>(m + n)) * chi_beta;
    if ((is(s, PairSet::A) && is(p, PairSet::H)) || (is(s, PairSet::H) && is(p, PairSet::A)))
        return -w.sgn * pow2(static_cast<int>(m + n + e)) * chi_beta;
    if (is(s, PairSet::G) && is(p, PairSet::G)) return pow2(static_cast<int>(n)) * chi_beta;
    if ((is(s, PairSet::G) && is(p, PairSet::H)) || (is(s, PairSet::H) && is(p, PairSet::G)))
        return -pow2(static_cast<int>(n + e)) * chi_beta;
    if (is(s, PairSet::H) && is(p, PairSet::H)) return pow2(static_cast<int>(n + 2 * e)) * chi_beta;
    return std::nullopt;
}

// D x D' block: 2^n, -2^(n+e), 2^(n+2e) by group, times `m_factor`; J kills it.
std::int64_t weight_dd_block(const WeightContext& w, DGroup s, DGroup p, std::int64_t m_factor) {
    if (s == DGroup::none || p == DGroup::none || s == DGroup::j || p == DGroup::j) return 0;
    const int extra = (s == DGroup::kl ? w.e : 0) + (p == DGroup::kl ? w.e : 0);
    const std::int64_t sign = (s == DGroup::kl) != (p == DGroup::kl) ? -1 : 1;
    return sign * pow2(w.n + extra) * m_factor;
}

std::int64_t weight_subfield_even(const Field& f, std::int64_t d, const WeightContext& w, const PairView& v,
                                  WeightTable wt) {
    if (auto ac = weight_ac_block(w, v.s.fine, v.p.fine, v.chi_beta)) return *ac;
    const DGroup gs = d_group(v.s.fine, wt), gp = d_group(v.p.fine, wt);
    if (gs == DGroup::none || gp == DGroup::none || gs == DGroup::j || gp == DGroup::j) return 0;
    int m_char = v.s.factor * v.p.factor;
    if (wt == WeightTable::as_printed) {
        const Element prod = f.mul(f.mul(v.a_coef, v.a_coef_primed), f.mul(f.pow(v.s.x, d), f.pow(v.p.x, d)));
        m_char = chi1(f, prod);
    }
    return weight_dd_block(w, gs, gp, static_cast<std::int64_t>(v.chi_beta) * m_char);
}

std::int64_t weight_general_odd(const WeightContext& w, const PairView& v, WeightTable wt) {
    const bool corr = wt == WeightTable::corrected;
    const PairSet s = v.s.fine, p = v.p.fine;
    if (s == PairSet::A && p == PairSet::A) return w.q2 * v.chi_beta;
    const std::int64_t cross = w.jac * pow2((3 * w.n + w.e) / 2) * v.chi_beta;
    if (s == PairSet::A && p == PairSet::F) return cross * (corr ? v.p.factor : 1);
    if (s == PairSet::F && p == PairSet::A) return cross * (corr ? v.s.factor : 1);
    if (s == PairSet::F && p == PairSet::F) return pow2(w.n + w.e) * v.chi_beta * (corr ? v.s.factor * v.p.factor : 1);
    return 0;
}

std::int64_t weight_general_even(const WeightContext& w, const PairView& v, WeightTable wt) {
    const PairSet s = v.s.fine, p = v.p.fine;
    if (auto ac = weight_ac_block(w, s, p, v.chi_beta)) return *ac;
    const DGroup gs = d_group(s, wt), gp = d_group(p, wt);
    const std::int64_t m1 = static_cast<std::int64_t>(v.chi_beta) * v.p.factor;  // M'
    const std::int64_t m2 = static_cast<std::int64_t>(v.chi_beta) * v.s.factor;  // M''
    const int n = w.n, e = w.e, m = w.m;

    // A, G or H on the unprimed side against I' or K'/L'
    if (gp == DGroup::i || gp == DGroup::kl) {
        const bool kl = gp == DGroup::kl;
        switch (s) {
            case PairSet::A: return (kl ? -w.sgn * pow2(m + n + e) : w.sgn * pow2(m + n)) * m1;
            case PairSet::G: return (kl ? -pow2(n + e) : pow2(n)) * m1;
            case PairSet::H: return (kl ? pow2(n + 2 * e) : -pow2(n + e)) * m1;
            default: break;
        }
    }
    if (gs == DGroup::i || gs == DGroup::kl) {
        const bool kl = gs == DGroup::kl;
        switch (p) {
            case PairSet::A: return (kl ? -w.sgn * pow2(m + n + e) : w.sgn * pow2(m + n)) * m2;
            case PairSet::G: return (kl ? -pow2(n + e) : pow2(n)) * m2;
            case PairSet::H: return (kl ? pow2(n + 2 * e) : -pow2(n + e)) * m2;
            default: break;
        }
    }
    return weight_dd_block(w, gs, gp, static_cast<std::int64_t>(v.chi_beta) * v.s.factor * v.p.factor);
}

void require_b(const Field& f, Element b) {
    if (b.is_zero()) throw UsageError("closed forms need b != 0");
    if (!f.contains(b)) throw UsageError("b lies outside the field");
}

void require_classifier_size(int n) {
    if (n > kClassifierMaxDegree)
        throw GuardrailError("pair classification enumerates q^2 pairs; n = " + std::to_string(n) +
                             " exceeds the n <= " + std::to_string(kClassifierMaxDegree) + " guardrail");
}

std::vector<std::int64_t> walsh_of(const std::vector<std::int64_t>& by_sum) {
    std::vector<std::int64_t> t = by_sum;
    fast_walsh_hadamard(t);
    return t;
}

}  // namespace

char to_char(PairSet s) { return static_cast<char>('A' + static_cast<int>(s)); }

std::string PairClass::labels() const {
    std::string out(1, to_char(side.coarse));
    if (side.fine != side.coarse) out += std::string(",") + to_char(side.fine);
    out += std::string(",") + to_char(primed.coarse) + "'";
    if (primed.fine != primed.coarse) out += std::string(",") + to_char(primed.fine) + "'";
    return out;
}

PairClassifier::PairClassifier(std::shared_ptr<const Field> field, int k)
    : field_(std::move(field)), params_(GoldParams::make(field_->degree(), k)) {
    require_classifier_size(params_.n);
    const Field& f = *field_;
    const SideContext ctx(f, params_);
    const std::uint32_t q = f.size();
    table_.resize(static_cast<std::size_t>(q) * q);
    // Walk pairs grouped by A = alpha + beta so L_A is built once per A.
    for (std::uint32_t a = 0; a < q; ++a) {
        std::optional<BinaryLinearMap> la;
        if (a != 0 && !params_.ratio_odd) la.emplace(ctx.lu(Element{a}));
        for (std::uint32_t beta = 0; beta < q; ++beta) {
            const std::uint32_t alpha = a ^ beta;
            const Element b = f.frobenius(Element{beta}, params_.n - k) + Element{beta};
            table_[static_cast<std::size_t>(alpha) * q + beta] =
                classify_side(ctx, Element{a}, b, la ? &*la : nullptr);
        }
    }
}

PairClass PairClassifier::classify(Element alpha, Element beta, Element c) const {
    const Field& f = *field_;
    if (c.is_zero()) throw UsageError("c must be nonzero");
    PairClass pc;
    pc.alpha = alpha;
    pc.beta = beta;
    pc.c = c;
    const Element alpha2 = f.mul(c, alpha), beta2 = f.mul(f.inv(c), beta);
    const auto r = coefficients(f, alpha, beta, params_.k);
    const auto r2 = coefficients(f, alpha2, beta2, params_.k);
    pc.a_coef = r.a;
    pc.b_coef = r.b;
    pc.a_coef_primed = r2.a;
    pc.b_coef_primed = r2.b;
    if (params_.ratio_odd) {
        const auto root = static_cast<std::int64_t>(inverse_exponent(params_.exponent(), params_.n));
        if (!r.a.is_zero()) pc.gamma = f.pow(r.a, root);
        if (!r2.a.is_zero()) pc.gamma_primed = f.pow(r2.a, root);
    }
    pc.side = side(alpha, beta);
    pc.primed = side(alpha2, beta2);
    return pc;
}

PairClass classify_pair(const Field& field, Element alpha, Element beta, Element c, const GoldParams& params) {
    if (c.is_zero()) throw UsageError("c must be nonzero");
    const SideContext ctx(field, params);
    PairClass pc;
    pc.alpha = alpha;
    pc.beta = beta;
    pc.c = c;
    const Element alpha2 = field.mul(c, alpha), beta2 = field.mul(field.inv(c), beta);
    const auto r = coefficients(field, alpha, beta, params.k);
    const auto r2 = coefficients(field, alpha2, beta2, params.k);
    pc.a_coef = r.a;
    pc.b_coef = r.b;
    pc.a_coef_primed = r2.a;
    pc.b_coef_primed = r2.b;
    if (params.ratio_odd) {
        if (!r.a.is_zero()) pc.gamma = field.pow(r.a, static_cast<std::int64_t>(ctx.root_exponent));
        if (!r2.a.is_zero()) pc.gamma_primed = field.pow(r2.a, static_cast<std::int64_t>(ctx.root_exponent));
    }
    pc.side = classify_side(ctx, r.a, r.b, nullptr);
    pc.primed = classify_side(ctx, r2.a, r2.b, nullptr);
    return pc;
}

std::string_view to_string(GoldTheorem t) {
    switch (t) {
        case GoldTheorem::c1_odd: return "c1-odd";
        case GoldTheorem::c1_even: return "c1-even";
        case GoldTheorem::subfield_odd: return "subfield-odd";
        case GoldTheorem::subfield_even: return "subfield-even";
        case GoldTheorem::general_odd: return "general-odd";
        case GoldTheorem::general_even: return "general-even";
    }
    return "?";
}

GoldTheorem theorem_for(const Field& field, Element c, const GoldParams& params) {
    if (c.is_zero()) throw UsageError("c must be nonzero");
    if (!field.contains(c)) throw UsageError("c lies outside the field");
    const bool odd = params.ratio_odd;
    if (c == Field::one()) return odd ? GoldTheorem::c1_odd : GoldTheorem::c1_even;
    if (field.in_subfield(c, params.e)) return odd ? GoldTheorem::subfield_odd : GoldTheorem::subfield_even;
    return odd ? GoldTheorem::general_odd : GoldTheorem::general_even;
}

GoldEvaluator::GoldEvaluator(std::shared_ptr<const PairClassifier> classifier, GoldTheorem theorem, Element c,
                             WeightTable weights)
    : classifier_(std::move(classifier)), theorem_(theorem), c_(c), weights_(weights) {
    const Field& f = classifier_->field();
    const GoldParams& p = classifier_->params();
    if (theorem_for(f, c, p) != theorem)
        throw UsageError("c = " + f.format(c) + " does not satisfy the hypotheses of " + std::string(to_string(theorem)) +
                         " (it belongs to " + std::string(to_string(theorem_for(f, c, p))) + ")");
    const WeightContext w = weight_context(p);
    const auto d = static_cast<std::int64_t>(p.exponent());
    const std::uint32_t q = f.size();
    const Element cinv = f.inv(c);
    const Element one_plus_cinv = Field::one() + cinv;

    by_sum_.assign(q, 0);
    for (std::uint32_t alpha = 0; alpha < q; ++alpha) {
        const Element alpha2 = f.mul(c, Element{alpha});
        for (std::uint32_t beta = 0; beta < q; ++beta) {
            const Element beta2 = f.mul(cinv, Element{beta});
            const PairView v{classifier_->side(Element{alpha}, Element{beta}), classifier_->side(alpha2, beta2),
                             chi1(f, f.mul(one_plus_cinv, Element{beta})), Element{alpha ^ beta}, alpha2 + beta2};
            std::int64_t t = 0;
            switch (theorem_) {
                case GoldTheorem::c1_odd: t = weight_c1_odd(w, v, weights_); break;
                case GoldTheorem::c1_even: t = weight_c1_even(w, v, weights_); break;
                case GoldTheorem::subfield_odd: t = weight_subfield_odd(w, v, weights_); break;
                case GoldTheorem::subfield_even: t = weight_subfield_even(f, d, w, v, weights_); break;
                case GoldTheorem::general_odd: t = weight_general_odd(w, v, weights_); break;
                case GoldTheorem::general_even: t = weight_general_even(w, v, weights_); break;
            }
            if (t != 0) {
                ++support_;
                by_sum_[alpha ^ beta] += t;
            }
        }
    }
    transform_ = walsh_of(by_sum_);
}

std::int64_t GoldEvaluator::scaled(Element b) const {
    const Field& f = classifier_->field();
    require_b(f, b);
    return transform_[f.trace_functional(b)];
}

std::int64_t GoldEvaluator::evaluate(Element b) const {
    const Field& f = classifier_->field();
    const std::int64_t total = scaled(b);
    const std::int64_t q2 = pow2(2 * f.degree());
    if (total % q2 != 0)
        throw ConsistencyError(std::string(to_string(theorem_)) + ": weighted sum " + std::to_string(total) +
                               " is not divisible by q^2 at b = " + f.format(b) + ", c = " + f.format(c_));
    return total / q2;
}

std::vector<std::optional<std::int64_t>> GoldEvaluator::row() const {
    const Field& f = classifier_->field();
    const std::int64_t q2 = pow2(2 * f.degree());
    std::vector<std::optional<std::int64_t>> out(f.size());
    for (std::uint32_t b = 1; b < f.size(); ++b) {
        const std::int64_t total = scaled(Element{b});
        if (total % q2 == 0) out[b] = total / q2;
        else if (weights_ == WeightTable::corrected)
            throw ConsistencyError(std::string(to_string(theorem_)) + ": weighted sum not divisible by q^2 at b = " +
                                   f.format(Element{b}));
    }
    return out;
}

namespace {

std::int64_t one_shot(const Field& field, Element b, Element c, const GoldParams& params, GoldTheorem expected,
                      WeightTable weights) {
    require_b(field, b);
    if (field.degree() != params.n) throw UsageError("GoldParams do not match the field degree");
    if (theorem_for(field, c, params) != expected)
        throw UsageError("c = " + field.format(c) + " does not satisfy the hypotheses of " +
                         std::string(to_string(expected)));
    auto classifier = std::make_shared<const PairClassifier>(std::make_shared<const Field>(field), params.k);
    return GoldEvaluator(classifier, expected, c, weights).evaluate(b);
}

}  // namespace

std::int64_t theorem_c1_odd(const Field& field, Element b, const GoldParams& params) {
    require_b(field, b);
    if (!params.ratio_odd) throw UsageError("theorem_c1_odd needs n/e odd");
    return field.rel_trace(field.sqrt(b), params.e).is_zero() ? 0 : pow2(params.e);
}

std::int64_t theorem_c1_odd_sum(const Field& field, Element b, const GoldParams& params) {
    return one_shot(field, b, Field::one(), params, GoldTheorem::c1_odd, WeightTable::corrected);
}

std::int64_t theorem_c1_even(const Field& field, Element b, const GoldParams& params, WeightTable weights) {
    return one_shot(field, b, Field::one(), params, GoldTheorem::c1_even, weights);
}

std::int64_t theorem_subfield_odd(const Field& field, Element b, Element c, const GoldParams& params,
                                  WeightTable weights) {
    return one_shot(field, b, c, params, GoldTheorem::subfield_odd, weights);
}

std::int64_t theorem_subfield_even(const Field& field, Element b, Element c, const GoldParams& params,
                                   WeightTable weights) {
    return one_shot(field, b, c, params, GoldTheorem::subfield_even, weights);
}

std::int64_t theorem_general_odd(const Field& field, Element b, Element c, const GoldParams& params,
                                 WeightTable weights) {
    return one_shot(field, b, c, params, GoldTheorem::general_odd, weights);
}

std::int64_t theorem_general_even(const Field& field, Element b, Element c, const GoldParams& params,
                                  WeightTable weights) {
    return one_shot(field, b, c, params, GoldTheorem::general_even, weights);
}

std::int64_t gold_cbct_closed(const Field& field, Element b, Element c, const GoldParams& params,
                              WeightTable weights) {
    const GoldTheorem t = theorem_for(field, c, params);
    if (t == GoldTheorem::c1_odd) return theorem_c1_odd(field, b, params);
    return one_shot(field, b, c, params, t, weights);
}

DecompositionEvaluator::DecompositionEvaluator(std::shared_ptr<const Field> field, int k, Element c,
                                               SumMethod method)
    : field_(std::move(field)) {
    const Field& f = *field_;
    if (c.is_zero()) throw UsageError("c must be nonzero");
    if (!f.contains(c)) throw UsageError("c lies outside the field");
    require_classifier_size(f.degree());
    const GoldParams params = GoldParams::make(f.degree(), k);
    const std::uint32_t q = f.size();

    // S_{alpha,beta} = chi1(beta) * Weil(A, B), one Weil row per A.
    std::vector<std::int64_t> s(static_cast<std::size_t>(q) * q);
    const WeilClosedForm closed(f, k);
    std::vector<std::int64_t> weil_row(q);
    for (std::uint32_t a = 0; a < q; ++a) {
        if (method == SumMethod::brute) {
            weil_row = weil_brute_row(f, Element{a}, k);
        } else {
            const auto r = closed.row(Element{a});
            for (std::uint32_t v = 0; v < q; ++v) weil_row[v] = r[v].value;
        }
        for (std::uint32_t beta = 0; beta < q; ++beta) {
            const Element b = f.frobenius(Element{beta}, params.n - k) + Element{beta};
            s[static_cast<std::size_t>(a ^ beta) * q + beta] = chi1(f, Element{beta}) * weil_row[b.bits];
        }
    }

    const Element cinv = f.inv(c);
    by_sum_.assign(q, 0);
    for (std::uint32_t alpha = 0; alpha < q; ++alpha) {
        const std::size_t row2 = static_cast<std::size_t>(f.mul(c, Element{alpha}).bits) * q;
        for (std::uint32_t beta = 0; beta < q; ++beta)
            by_sum_[alpha ^ beta] += s[static_cast<std::size_t>(alpha) * q + beta] *
                                     s[row2 + f.mul(cinv, Element{beta}).bits];
    }
    transform_ = walsh_of(by_sum_);
}

std::int64_t DecompositionEvaluator::evaluate(Element b) const {
    const Field& f = *field_;
    require_b(f, b);
    const std::int64_t total = transform_[f.trace_functional(b)];
    const std::int64_t q2 = pow2(2 * f.degree());
    if (total % q2 != 0)
        throw ConsistencyError("decomposition: double Weil sum " + std::to_string(total) +
                               " is not divisible by q^2 at b = " + f.format(b));
    return total / q2;
}

std::int64_t decomposition_check(const Field& field, Element c, Element b, const GoldParams& params,
                                 SumMethod method) {
    if (field.degree() != params.n) throw UsageError("GoldParams do not match the field degree");
    return DecompositionEvaluator(std::make_shared<const Field>(field), params.k, c, method).evaluate(b);
}

ScaledBound corollary_bound(const PairClassifier& classifier, GoldTheorem theorem, Element c, WeightTable weights) {
    const Field& f = classifier.field();
    const GoldParams& p = classifier.params();
    if (theorem_for(f, c, p) != theorem) throw UsageError("c does not satisfy the theorem's hypotheses");
    if (weights == WeightTable::as_printed &&
        (theorem == GoldTheorem::subfield_even || theorem == GoldTheorem::general_even))
        throw UsageError("no literal bound for " + std::string(to_string(theorem)));
    const WeightContext w = weight_context(p);
    const auto d = static_cast<std::int64_t>(p.exponent());
    const std::uint32_t q = f.size();
    const Element cinv = f.inv(c);

    // Corrected: sum of |T|. Printed: T with every character set to +1, so
    // the literal sign of the cross coefficient survives.
    ScaledBound bound{0, w.q2};
    for (std::uint32_t alpha = 0; alpha < q; ++alpha) {
        for (std::uint32_t beta = 0; beta < q; ++beta) {
            SideClass s = classifier.side(Element{alpha}, Element{beta});
            SideClass pr = classifier.side(f.mul(c, Element{alpha}), f.mul(cinv, Element{beta}));
            if (weights == WeightTable::as_printed) s.factor = pr.factor = 1;
            const PairView v{s, pr, 1, Field::zero(), Field::zero()};
            std::int64_t t = 0;
            switch (theorem) {
                case GoldTheorem::c1_odd: t = weight_c1_odd(w, v, weights); break;
                case GoldTheorem::c1_even: t = weight_c1_even(w, v, weights); break;
                case GoldTheorem::subfield_odd: t = weight_subfield_odd(w, v, weights); break;
                case GoldTheorem::subfield_even: t = weight_subfield_even(f, d, w, v, weights); break;
                case GoldTheorem::general_odd: t = weight_general_odd(w, v, weights); break;
                case GoldTheorem::general_even: t = weight_general_even(w, v, weights); break;
            }
            bound.scaled += weights == WeightTable::corrected ? std::llabs(t) : t;
        }
    }
    return bound;
}

}  // namespace goldbct
