#pragma once

#include "stabreg/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stabreg {

/// An error function sigma : N -> (0, 1), evaluated exactly.
///
/// Textual forms accepted by parse():
///   "1/4" or "const:1/4"        sigma(n) = c
///   "inverse:1/2"               sigma(n) = c / (n + 1)
///   "inverse_square:1/2"        sigma(n) = c / (n + 1)^2
///   "table:1/2,1/3,1/4;tail=1/5" sigma(n) = table[n] for n < size, else tail
class ErrorFunction {
public:
    enum class Kind { constant, inverse, inverse_square, table };

    static ErrorFunction constant(const Rational& c);
    static ErrorFunction inverse(const Rational& c);
    static ErrorFunction inverse_square(const Rational& c);
    static ErrorFunction table(std::vector<Rational> values, const Rational& tail);
    static ErrorFunction parse(std::string_view text);

    Kind kind() const { return kind_; }
    Rational operator()(std::uint64_t n) const;

    /// Non-increasing on 0..upto (the named forms always are).
    bool is_decreasing(std::uint64_t upto) const;
    /// n -> min over i <= n of sigma(i).
    ErrorFunction running_min() const;

    std::string to_string() const;

private:
    Kind kind_ = Kind::constant;
    Rational c_;
    std::vector<Rational> table_;
};

/// tau(m) = eps * sigma(floor(2 m^2 / eps))^2 / (8 m), the goodness a base
/// part needs so that its equal-size chunks come out sigma(n)^2/4-good.
Rational refinement_tau(std::uint64_t m, const Rational& eps, const ErrorFunction& sigma);

/// floor(2 m^2 / eps), the bound on the refined part count.
std::uint64_t refinement_part_bound(std::uint64_t m, const Rational& eps);

}  // namespace stabreg
