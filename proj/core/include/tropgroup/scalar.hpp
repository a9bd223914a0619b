#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <utility>

namespace tropgroup {

/// Exact rational number; stored in canonical reduced form.
using Rational = boost::multiprecision::cpp_rational;

/// An element of the max-plus semiring: an exact rational or -infinity.
///
/// -infinity is a distinguished state, never a sentinel rational, so
/// arithmetic on it cannot happen by accident.
class Scalar {
public:
    /// Default-constructs -infinity, the additive identity.
    Scalar() : finite_(false) {}
    Scalar(Rational v) : finite_(true), value_(std::move(v)) {}
    Scalar(long v) : finite_(true), value_(v) {}
    Scalar(int v) : finite_(true), value_(v) {}

    static Scalar neg_inf() { return Scalar(); }
    static Scalar zero() { return Scalar(Rational(0)); }

    bool is_neg_inf() const { return !finite_; }
    bool is_finite() const { return finite_; }

    /// The rational value; only meaningful when is_finite().
    const Rational& value() const { return value_; }

    bool operator==(const Scalar& o) const {
        if (finite_ != o.finite_) return false;
        return !finite_ || value_ == o.value_;
    }

    /// Total order with -infinity strictly below every rational.
    bool operator<(const Scalar& o) const {
        if (!finite_) return o.finite_;
        if (!o.finite_) return false;
        return value_ < o.value_;
    }
    bool operator<=(const Scalar& o) const { return *this == o || *this < o; }
    bool operator>(const Scalar& o) const { return o < *this; }
    bool operator>=(const Scalar& o) const { return o <= *this; }

private:
    bool finite_;
    Rational value_;
};

/// Tropical addition: max under the total order. -infinity is neutral.
inline Scalar add(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

/// Tropical multiplication: rational sum. -infinity is absorbing.
inline Scalar mul(const Scalar& a, const Scalar& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return Scalar::neg_inf();
    return Scalar(a.value() + b.value());
}

/// Canonical text form: "-inf" or the reduced rational ("3", "-5/2").
std::string to_string(const Scalar& s);

/// Inverse of to_string; throws ParseError on malformed input.
Scalar scalar_from_string(const std::string& text);

}  // namespace tropgroup
