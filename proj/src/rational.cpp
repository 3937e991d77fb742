#include "stabreg/rational.hpp"

#include "stabreg/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <limits>

namespace stabreg {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw InputError("empty integer in rational '" + std::string(whole) + "'");
    }
    std::size_t start = 0;
    if (text[0] == '-' || text[0] == '+') {
        start = 1;
    }
    if (start == text.size()) {
        throw InputError("malformed rational '" + std::string(whole) + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw InputError("malformed rational '" + std::string(whole) +
                             "' (expected p/q with integer p, q)");
        }
    }
    return BigInt(std::string(text));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto whole = trim(text);
    const auto slash = whole.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(whole, whole));
    }
    const BigInt num = parse_integer(trim(whole.substr(0, slash)), whole);
    const BigInt den = parse_integer(trim(whole.substr(slash + 1)), whole);
    if (den == 0) {
        throw InputError("zero denominator in rational '" + std::string(whole) + "'");
    }
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    const auto num = boost::multiprecision::numerator(value);
    const auto den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

Rational floor(const Rational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    BigInt q = num / den;
    if (num < 0 && q * den != num) {
        q -= 1;
    }
    return Rational(q);
}

Rational ceil(const Rational& value) {
    return -floor(-value);
}

std::int64_t to_int64(const Rational& integral_value) {
    if (boost::multiprecision::denominator(integral_value) != 1) {
        throw InputError("expected an integer, got " + to_string(integral_value));
    }
    const BigInt num = boost::multiprecision::numerator(integral_value);
    if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min()) {
        throw CapacityError("integer " + num.str() + " exceeds 64 bits");
    }
    return num.convert_to<std::int64_t>();
}

bool exact_sqrt(const Rational& value, Rational& root) {
    if (value < 0) {
        return false;
    }
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    const BigInt rn = boost::multiprecision::sqrt(num);
    const BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) {
        return false;
    }
    root = Rational(rn, rd);
    return true;
}

Threshold::Threshold(const Rational& eps) : value_(eps) {
    constexpr std::int64_t kLimit = std::int64_t{1} << 40;
    const BigInt num = boost::multiprecision::numerator(eps);
    const BigInt den = boost::multiprecision::denominator(eps);
    if (num > -kLimit && num < kLimit && den < kLimit) {
        small_ = true;
        num_ = num.convert_to<std::int64_t>();
        den_ = den.convert_to<std::int64_t>();
    }
}

bool Threshold::below(std::int64_t count, std::int64_t total) const {
    if (small_) {
        return static_cast<__int128>(count) * den_ < static_cast<__int128>(num_) * total;
    }
    return Rational(count) < value_ * total;
}

bool Threshold::above_complement(std::int64_t count, std::int64_t total) const {
    if (small_) {
        return static_cast<__int128>(count) * den_ > static_cast<__int128>(den_ - num_) * total;
    }
    return Rational(count) > (1 - value_) * total;
}

}  // namespace stabreg
