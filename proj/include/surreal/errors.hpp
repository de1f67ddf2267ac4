#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surreal {

// Base class for everything this library throws.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text. `position` is a 0-based byte offset into the source.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Operation applied outside its mathematical domain (inverse of zero,
// square root of a negative number, division by the zero polynomial, ...).
class domain_error : public error {
public:
    using error::error;
};

// Leading coefficient has no exact rational square root.
class not_a_square_error : public domain_error {
public:
    using domain_error::domain_error;
};

// Bezout identity requested for polynomials with a nonconstant common factor.
class not_coprime_error : public domain_error {
public:
    using domain_error::domain_error;
};

// The real part's simple real root exists but is irrational; carries the
// isolating interval so the caller sees where the root lives.
class root_not_rational_error : public domain_error {
public:
    root_not_rational_error(const std::string& what, std::string interval_low,
                            std::string interval_high)
        : domain_error(what), low_(std::move(interval_low)), high_(std::move(interval_high)) {}

    const std::string& interval_low() const { return low_; }
    const std::string& interval_high() const { return high_; }

private:
    std::string low_;
    std::string high_;
};

// The real part has no simple real root and no rational factor to recurse on.
class root_not_simple_error : public domain_error {
public:
    using domain_error::domain_error;
};

}  // namespace surreal
