#include "surreal/number.hpp"

#include <algorithm>
#include <utility>

namespace surreal {

Number::Number(const Rational& r) {
    if (!r.is_zero()) terms_.push_back(Term{Number(), r});
}

Number::Number(long long n) : Number(Rational(n)) {}

Number::Number(std::vector<Term> terms, unchecked_tag) : terms_(std::move(terms)) {}

Number Number::from_terms(std::vector<Term> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coefficient.is_zero()) throw domain_error("normal form with zero coefficient");
        if (i > 0 && compare(terms[i - 1].exponent, terms[i].exponent) != std::strong_ordering::greater)
            throw domain_error("normal form exponents not strictly decreasing");
    }
    return Number(std::move(terms), unchecked_tag{});
}

const Number& Number::lead_exponent() const {
    if (is_zero()) throw domain_error("leading exponent of zero");
    return terms_.front().exponent;
}

const Rational& Number::lead_coefficient() const {
    if (is_zero()) throw domain_error("leading coefficient of zero");
    return terms_.front().coefficient;
}

Rational Number::coefficient(const Number& exponent) const {
    for (const Term& t : terms_) {
        const auto c = compare(t.exponent, exponent);
        if (c == std::strong_ordering::equal) return t.coefficient;
        if (c == std::strong_ordering::less) break;  // sorted decreasing
    }
    return Rational(0);
}

std::vector<Number> Number::exponents() const {
    std::vector<Number> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) out.push_back(t.exponent);
    return out;
}

std::vector<Rational> Number::coefficients() const {
    std::vector<Rational> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) out.push_back(t.coefficient);
    return out;
}

bool operator==(const Number& a, const Number& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const Number& a, const Number& b) { return compare(a, b); }

std::strong_ordering compare(const Number& a, const Number& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
        if (i == ta.size())  // b has an extra monomial; its sign decides
            return tb[j].coefficient.is_negative() ? std::strong_ordering::greater
                                                   : std::strong_ordering::less;
        if (j == tb.size())
            return ta[i].coefficient.is_negative() ? std::strong_ordering::less
                                                   : std::strong_ordering::greater;
        const auto ec = compare(ta[i].exponent, tb[j].exponent);
        if (ec == std::strong_ordering::greater)  // a - b led by ta[i]
            return ta[i].coefficient.is_negative() ? std::strong_ordering::less
                                                   : std::strong_ordering::greater;
        if (ec == std::strong_ordering::less)
            return tb[j].coefficient.is_negative() ? std::strong_ordering::greater
                                                   : std::strong_ordering::less;
        if (ta[i].coefficient != tb[j].coefficient)
            return ta[i].coefficient < tb[j].coefficient ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
        ++i;
        ++j;
    }
    return std::strong_ordering::equal;
}

Number normalize(MonomialFamily family) {
    std::stable_sort(family.begin(), family.end(), [](const Term& x, const Term& y) {
        return compare(x.exponent, y.exponent) == std::strong_ordering::greater;
    });
    std::vector<Term> out;
    for (Term& t : family) {
        if (!out.empty() && compare(out.back().exponent, t.exponent) == std::strong_ordering::equal) {
            out.back().coefficient += t.coefficient;
            if (out.back().coefficient.is_zero()) out.pop_back();
        } else if (!t.coefficient.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    // Grouping can cancel a coefficient that later entries re-feed; one pass
    // over the sorted family is still enough because equal exponents are
    // adjacent, but a cancelled group must not merge with its neighbor.
    // The pop_back above handles exactly that.
    return Number(std::move(out), Number::unchecked_tag{});
}

Number add(const Number& a, const Number& b) {
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        const auto c = compare(a.terms_[i].exponent, b.terms_[j].exponent);
        if (c == std::strong_ordering::greater) {
            out.push_back(a.terms_[i++]);
        } else if (c == std::strong_ordering::less) {
            out.push_back(b.terms_[j++]);
        } else {
            Rational s = a.terms_[i].coefficient + b.terms_[j].coefficient;
            if (!s.is_zero()) out.push_back(Term{a.terms_[i].exponent, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
    return Number(std::move(out), Number::unchecked_tag{});
}

Number negate(const Number& a) {
    std::vector<Term> out = a.terms_;
    for (Term& t : out) t.coefficient = -t.coefficient;
    return Number(std::move(out), Number::unchecked_tag{});
}

Number scalar_mul(const Number& a, const Rational& r) {
    if (r.is_zero()) return Number();
    std::vector<Term> out = a.terms_;
    for (Term& t : out) t.coefficient *= r;
    return Number(std::move(out), Number::unchecked_tag{});
}

Number exp_omega(const Number& y) {
    return Number::from_terms({Term{y, Rational(1)}});
}

namespace {

bool all_exponents(const Number& a, std::strong_ordering want) {
    const Number zero;
    for (const Term& t : a.terms())
        if (compare(t.exponent, zero) != want) return false;
    return true;
}

bool is_ordinal_rec(const Number& a) {
    for (const Term& t : a.terms()) {
        if (t.coefficient.is_negative() || !t.coefficient.is_integer()) return false;
        if (!is_ordinal_rec(t.exponent)) return false;
    }
    return true;
}

}  // namespace

NumberClass classify(const Number& a) {
    NumberClass c;
    c.is_zero = a.is_zero();
    c.is_real = a.is_zero() || (a.height() == 1 && a.terms().front().exponent.is_zero());
    c.is_ordinal = is_ordinal_rec(a);
    c.is_infinitesimal = all_exponents(a, std::strong_ordering::less);
    c.is_purely_infinite = all_exponents(a, std::strong_ordering::greater);
    return c;
}

std::size_t liminal_rank(const Number& a) {
    std::size_t best = 0;
    for (const Term& t : a.terms()) best = std::max(best, liminal_rank(t.exponent));
    return a.is_zero() ? 0 : best + 1;
}

}  // namespace surreal
