#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "surreal/rational.hpp"

namespace surreal {

// Univariate polynomial with exact rational coefficients.
// Stored densely, coeffs_[k] is the coefficient of x^k; trailing zeros trimmed,
// so the leading coefficient is nonzero unless the polynomial is zero.
class RationalPolynomial {
public:
    RationalPolynomial() = default;

    explicit RationalPolynomial(std::vector<Rational> ascending_coeffs)
        : coeffs_(std::move(ascending_coeffs)) {
        trim();
    }

    static RationalPolynomial constant(const Rational& c) {
        return RationalPolynomial(std::vector<Rational>{c});
    }

    static RationalPolynomial monomial(std::size_t deg, const Rational& c = Rational(1));

    // Convenience for literals written highest degree first: {1, 0, -1} is x^2 - 1.
    static RationalPolynomial from_desc(std::vector<Rational> desc);

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }

    Rational eval(const Rational& x) const;

    RationalPolynomial derivative() const;

    // p(scale * x + shift), exact.
    RationalPolynomial compose_linear(const Rational& scale, const Rational& shift) const;

    std::string str() const;  // human-readable, for diagnostics

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p);
    friend RationalPolynomial operator-(const RationalPolynomial& a);

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

struct PolyDivision {
    RationalPolynomial quotient;
    RationalPolynomial remainder;
};

// Euclidean division E = C*R + G with deg(G) < deg(R). R must be nonzero.
PolyDivision poly_euclid(const RationalPolynomial& e, const RationalPolynomial& r);

// Monic gcd via the Euclidean remainder sequence; gcd(0, 0) = 0.
RationalPolynomial poly_gcd(const RationalPolynomial& a, const RationalPolynomial& b);

struct BezoutIdentity {
    RationalPolynomial x;
    RationalPolynomial y;
};

// X*Q + Y*R = 1 exactly when gcd(Q, R) is a nonzero constant; nullopt otherwise.
// Q and R must be nonzero.
std::optional<BezoutIdentity> poly_bezout(const RationalPolynomial& q,
                                          const RationalPolynomial& r);

// One isolated real root: exact rational roots come back as degenerate
// intervals (low == high), irrational ones as an open-ended bracket of
// width <= the requested precision with a sign change across it.
struct RootInterval {
    Rational low;
    Rational high;
    bool simple = true;  // multiplicity 1 in the input polynomial

    bool is_exact() const { return low == high; }
};

// Every real root of p lies in exactly one returned interval; intervals are
// sorted ascending and pairwise disjoint. Simplicity is decided via gcd(p, p').
// p must be nonzero and precision > 0.
std::vector<RootInterval> real_root_isolate(const RationalPolynomial& p,
                                            const Rational& precision);

}  // namespace surreal
