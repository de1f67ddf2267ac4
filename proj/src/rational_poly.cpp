#include "surreal/rational_poly.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace surreal {

RationalPolynomial RationalPolynomial::monomial(std::size_t deg, const Rational& c) {
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = c;
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::from_desc(std::vector<Rational> desc) {
    std::reverse(desc.begin(), desc.end());
    return RationalPolynomial(std::move(desc));
}

Rational RationalPolynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = Rational(static_cast<long long>(k)) * coeffs_[k];
    return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::compose_linear(const Rational& scale,
                                                      const Rational& shift) const {
    // Horner over polynomials: acc = acc * (scale*x + shift) + c_k.
    RationalPolynomial arg({shift, scale});
    RationalPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * arg + constant(*it);
    return acc;
}

std::string RationalPolynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (out.empty())
            out += c.is_negative() ? "-" : "";
        else
            out += c.is_negative() ? " - " : " + ";
        if (k == 0) {
            out += mag.str();
        } else {
            if (!(mag == Rational(1))) out += mag.str() + "*";
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
    return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a + (-b);
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p) {
    std::vector<Rational> v = p.coeffs_;
    for (auto& x : v) x *= c;
    return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a) { return Rational(-1) * a; }

PolyDivision poly_euclid(const RationalPolynomial& e, const RationalPolynomial& r) {
    if (r.is_zero()) throw domain_error("polynomial division by zero polynomial");
    std::vector<Rational> rem = e.coeffs();
    const int dr = r.degree();
    const Rational lead_inv = r.leading().reciprocal();
    if (e.degree() < dr) return {RationalPolynomial{}, e};
    std::vector<Rational> quo(static_cast<std::size_t>(e.degree() - dr) + 1, Rational(0));
    for (int k = e.degree(); k >= dr; --k) {
        const Rational c = rem[static_cast<std::size_t>(k)] * lead_inv;
        if (c.is_zero()) continue;
        quo[static_cast<std::size_t>(k - dr)] = c;
        for (int j = 0; j <= dr; ++j)
            rem[static_cast<std::size_t>(k - dr + j)] -= c * r.coeff(static_cast<std::size_t>(j));
    }
    rem.resize(static_cast<std::size_t>(std::max(dr, 0)));
    return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial poly_gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
    RationalPolynomial r0 = a;
    RationalPolynomial r1 = b;
    while (!r1.is_zero()) {
        RationalPolynomial r2 = poly_euclid(r0, r1).remainder;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    if (r0.is_zero()) return r0;
    return r0.leading().reciprocal() * r0;  // monic
}

std::optional<BezoutIdentity> poly_bezout(const RationalPolynomial& q,
                                          const RationalPolynomial& r) {
    if (q.is_zero() || r.is_zero()) throw domain_error("bezout of zero polynomial");
    RationalPolynomial old_r = q, cur_r = r;
    RationalPolynomial old_x = RationalPolynomial::constant(1), cur_x;
    RationalPolynomial old_y, cur_y = RationalPolynomial::constant(1);
    while (!cur_r.is_zero()) {
        auto [quot, rem] = poly_euclid(old_r, cur_r);
        RationalPolynomial nx = old_x - quot * cur_x;
        RationalPolynomial ny = old_y - quot * cur_y;
        old_r = std::exchange(cur_r, std::move(rem));
        old_x = std::exchange(cur_x, std::move(nx));
        old_y = std::exchange(cur_y, std::move(ny));
    }
    if (old_r.degree() > 0) return std::nullopt;  // nonconstant common factor
    const Rational scale = old_r.leading().reciprocal();  // identity normalized to equal 1
    return BezoutIdentity{scale * old_x, scale * old_y};
}

namespace {

// Number of sign variations in the coefficient sequence (zeros skipped).
int sign_variations(const RationalPolynomial& p) {
    int vars = 0;
    int prev = 0;
    for (const auto& c : p.coeffs()) {
        const int s = c.sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

// Descartes bound on the number of roots of p in the open interval (lo, hi):
// map (0,1) onto (lo, hi), then count variations of (1+x)^n * q(1/(1+x)).
int descartes_bound(const RationalPolynomial& p, const Rational& lo, const Rational& hi) {
    RationalPolynomial q = p.compose_linear(hi - lo, lo);  // roots in (0,1) now matter
    std::vector<Rational> rev(q.coeffs().rbegin(), q.coeffs().rend());
    RationalPolynomial t = RationalPolynomial(std::move(rev)).compose_linear(1, 1);
    return sign_variations(t);
}

// All positive divisors of |n| by trial division. Desk scale.
std::vector<BigInt> divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Scale to a primitive integer polynomial (content removed).
std::vector<BigInt> primitive_integer_coeffs(const RationalPolynomial& p) {
    BigInt den_lcm = 1;
    for (const auto& c : p.coeffs())
        den_lcm = boost::multiprecision::lcm(den_lcm, c.denominator());
    std::vector<BigInt> ints;
    ints.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) ints.push_back(c.numerator() * (den_lcm / c.denominator()));
    BigInt content = 0;
    for (const auto& v : ints) content = boost::multiprecision::gcd(content, v);
    if (content > 1)
        for (auto& v : ints) v /= content;
    return ints;
}

// All rational roots of p (each listed once), found by the rational-root test.
std::vector<Rational> rational_roots(const RationalPolynomial& p) {
    std::vector<Rational> roots;
    RationalPolynomial s = p;
    // Strip roots at zero first.
    if (s.coeff(0).is_zero()) {
        roots.push_back(Rational(0));
        while (s.coeff(0).is_zero() && s.degree() > 0) {
            std::vector<Rational> shifted(s.coeffs().begin() + 1, s.coeffs().end());
            s = RationalPolynomial(std::move(shifted));
        }
    }
    if (s.degree() < 1) return roots;
    const std::vector<BigInt> ints = primitive_integer_coeffs(s);
    for (const BigInt& pnum : divisors(ints.front())) {
        for (const BigInt& qden : divisors(ints.back())) {
            if (boost::multiprecision::gcd(pnum, qden) != 1) continue;
            for (int sign : {1, -1}) {
                const Rational cand(sign * pnum, qden);
                if (s.eval(cand).is_zero()) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Deflate an exact root (single factor x - r).
RationalPolynomial deflate(const RationalPolynomial& p, const Rational& r) {
    return poly_euclid(p, RationalPolynomial({-r, Rational(1)})).quotient;
}

// Cauchy bound: all real roots lie in (-m, m).
Rational cauchy_bound(const RationalPolynomial& p) {
    Rational m(0);
    const Rational lead = p.leading().abs();
    for (int k = 0; k < p.degree(); ++k) {
        const Rational q = p.coeff(static_cast<std::size_t>(k)).abs() / lead;
        if (q > m) m = q;
    }
    return m + Rational(1);
}

}  // namespace

std::vector<RootInterval> real_root_isolate(const RationalPolynomial& p,
                                            const Rational& precision) {
    if (p.is_zero()) throw domain_error("root isolation of zero polynomial");
    if (!(precision > Rational(0))) throw domain_error("root isolation precision must be > 0");
    std::vector<RootInterval> out;
    if (p.degree() < 1) return out;

    const RationalPolynomial deriv_gcd = poly_gcd(p, p.derivative());
    RationalPolynomial sqfree = poly_euclid(p, deriv_gcd).quotient;  // all roots, each once

    // Exact rational roots first; deflated so the bisection phase never
    // lands a subdivision point on a root.
    std::vector<Rational> exact = rational_roots(sqfree);
    for (const Rational& r : exact) {
        out.push_back({r, r, deriv_gcd.eval(r) != Rational(0) || deriv_gcd.degree() < 1});
        sqfree = deflate(sqfree, r);
    }

    if (sqfree.degree() >= 1) {
        // Roots of sqfree shared with gcd(p, p') have multiplicity > 1 in p.
        const RationalPolynomial repeated = poly_gcd(sqfree, deriv_gcd);
        const Rational bound = cauchy_bound(sqfree);
        std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
        std::vector<std::pair<Rational, Rational>> isolated;
        while (!work.empty()) {
            auto [lo, hi] = work.back();
            work.pop_back();
            const int n = descartes_bound(sqfree, lo, hi);
            if (n == 0) continue;
            const Rational mid = (lo + hi) / Rational(2);
            if (n == 1) {
                // Exactly one root inside; narrow by sign-change bisection.
                Rational a = lo, b = hi;
                const int sign_a = sqfree.eval(a).sign();
                auto needs_narrowing = [&](const Rational& x, const Rational& y) {
                    if (y - x > precision) return true;
                    for (const Rational& r : exact)  // keep exact roots strictly outside
                        if (x <= r && r <= y) return true;
                    return false;
                };
                while (needs_narrowing(a, b)) {
                    const Rational m = (a + b) / Rational(2);
                    if (sqfree.eval(m).sign() == sign_a)
                        a = m;
                    else
                        b = m;
                }
                isolated.emplace_back(a, b);
            } else {
                work.emplace_back(lo, mid);
                work.emplace_back(mid, hi);
            }
        }
        for (const auto& [a, b] : isolated) {
            bool simple = true;
            if (repeated.degree() >= 1 && repeated.eval(a).sign() * repeated.eval(b).sign() < 0)
                simple = false;
            out.push_back({a, b, simple});
        }
    }

    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.low < y.low; });
    return out;
}

}  // namespace surreal
