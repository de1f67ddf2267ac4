#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "surreal/rational.hpp"

namespace surreal {

struct Term;

// A number in normal form: a finite sum  sum_i omega^{e_i} * r_i  with
// strictly decreasing exponents e_i (themselves Numbers) and nonzero rational
// coefficients r_i. The empty sum is the unique representation of 0.
// Values are immutable after construction and freely shareable.
class Number {
public:
    Number() = default;  // zero

    Number(const Rational& r);  // NOLINT: reals embed implicitly
    Number(long long n);        // NOLINT

    // Validates the normal-form invariants (strict decrease, nonzero
    // coefficients); prefer normalize() for unnormalized input.
    static Number from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    // Number of normal-form terms (the hauteur of this finite fragment).
    std::size_t height() const { return terms_.size(); }

    const Number& lead_exponent() const;
    const Rational& lead_coefficient() const;

    // Coefficient at a given exponent; zero when absent.
    Rational coefficient(const Number& exponent) const;

    // The (exponent set, coefficient family) view of the normal form.
    std::vector<Number> exponents() const;
    std::vector<Rational> coefficients() const;

    friend bool operator==(const Number& a, const Number& b);
    friend std::strong_ordering operator<=>(const Number& a, const Number& b);

private:
    struct unchecked_tag {};
    Number(std::vector<Term> terms, unchecked_tag);

    std::vector<Term> terms_;

    friend Number add(const Number&, const Number&);
    friend Number negate(const Number&);
    friend Number scalar_mul(const Number&, const Rational&);
    friend Number normalize(std::vector<Term> family);
};

// One monomial omega^exponent * coefficient. Inside a Number the coefficient
// is always nonzero; in a MonomialFamily anything goes.
struct Term {
    Number exponent;
    Rational coefficient;

    friend bool operator==(const Term& a, const Term& b) {
        return a.exponent == b.exponent && a.coefficient == b.coefficient;
    }
};

// Unnormalized finite multiset of monomials: duplicate exponents and zero
// coefficients permitted. normalize() groups, prunes and sorts it.
using MonomialFamily = std::vector<Term>;

// Total order on numbers: the sign of a - b, decided at the largest exponent
// where the coefficients differ.
std::strong_ordering compare(const Number& a, const Number& b);

// Groups equal exponents, drops zero coefficients, sorts strictly decreasing.
Number normalize(MonomialFamily family);

Number add(const Number& a, const Number& b);
Number negate(const Number& a);
Number scalar_mul(const Number& a, const Rational& r);

inline Number sub(const Number& a, const Number& b) { return add(a, negate(b)); }

inline Number operator+(const Number& a, const Number& b) { return add(a, b); }
inline Number operator-(const Number& a, const Number& b) { return sub(a, b); }
inline Number operator-(const Number& a) { return negate(a); }

inline std::size_t height(const Number& a) { return a.height(); }

// The monomial omega^y.
Number exp_omega(const Number& y);

inline Number omega() { return exp_omega(Number(1)); }

struct NumberClass {
    bool is_zero = false;
    bool is_real = false;              // 0, or a single term with exponent 0
    bool is_ordinal = false;           // exponents ordinals, coefficients positive integers
    bool is_infinitesimal = false;     // every exponent < 0
    bool is_purely_infinite = false;   // every exponent > 0
};

NumberClass classify(const Number& a);

// Least construction stage containing a: rank(0) = 0, otherwise
// 1 + max rank over the exponents.
std::size_t liminal_rank(const Number& a);

}  // namespace surreal
