#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace theta {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown when input data violates a documented invariant.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A partition does not fit in the requested r x m box.
class BoxViolation : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A skew shape lambda/mu was requested with mu not contained in lambda.
class ContainmentError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Builds a canonical rational p/q in lowest terms.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// Parses "p/q" or "p" into a canonical rational.
Rational parse_rational(const std::string& text);

BigInt binomial(unsigned n, unsigned k);

}  // namespace theta
