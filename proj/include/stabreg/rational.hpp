#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace stabreg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q" or "p" into an exact rational. Decimal notation is rejected.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

Rational floor(const Rational& value);
Rational ceil(const Rational& value);
std::int64_t to_int64(const Rational& integral_value);

/// Exact square root when `value` is a perfect rational square.
bool exact_sqrt(const Rational& value, Rational& root);

/// A fixed fraction eps prepared for repeated tests of the form
/// `count < eps * total` and `count > (1 - eps) * total` on integer counts.
/// These comparisons are the inner loop of every goodness predicate.
class Threshold {
public:
    explicit Threshold(const Rational& eps);

    const Rational& value() const { return value_; }

    /// count < eps * total
    bool below(std::int64_t count, std::int64_t total) const;
    /// count > (1 - eps) * total
    bool above_complement(std::int64_t count, std::int64_t total) const;
    /// either clause holds
    bool lopsided(std::int64_t count, std::int64_t total) const {
        return below(count, total) || above_complement(count, total);
    }

private:
    Rational value_;
    bool small_ = false;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace stabreg
