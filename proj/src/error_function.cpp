#include "stabreg/error_function.hpp"

#include "stabreg/errors.hpp"

#include <algorithm>

namespace stabreg {

namespace {

void require_open_unit(const Rational& value, const std::string& what) {
    if (value <= 0 || value >= 1) {
        throw InputError(what + " must lie strictly between 0 and 1, got " + to_string(value));
    }
}

}  // namespace

ErrorFunction ErrorFunction::constant(const Rational& c) {
    require_open_unit(c, "const sigma");
    ErrorFunction f;
    f.kind_ = Kind::constant;
    f.c_ = c;
    return f;
}

ErrorFunction ErrorFunction::inverse(const Rational& c) {
    require_open_unit(c, "inverse sigma coefficient");
    ErrorFunction f;
    f.kind_ = Kind::inverse;
    f.c_ = c;
    return f;
}

ErrorFunction ErrorFunction::inverse_square(const Rational& c) {
    require_open_unit(c, "inverse_square sigma coefficient");
    ErrorFunction f;
    f.kind_ = Kind::inverse_square;
    f.c_ = c;
    return f;
}

ErrorFunction ErrorFunction::table(std::vector<Rational> values, const Rational& tail) {
    for (std::size_t i = 0; i < values.size(); ++i) require_open_unit(values[i], "sigma(" + std::to_string(i) + ")");
    require_open_unit(tail, "sigma tail");
    ErrorFunction f;
    f.kind_ = Kind::table;
    f.table_ = std::move(values);
    f.c_ = tail;
    return f;
}

ErrorFunction ErrorFunction::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) return constant(parse_rational(text));
    const std::string_view head = text.substr(0, colon);
    const std::string_view body = text.substr(colon + 1);
    if (head == "const") return constant(parse_rational(body));
    if (head == "inverse") return inverse(parse_rational(body));
    if (head == "inverse_square") return inverse_square(parse_rational(body));
    if (head == "table") {
        const auto semi = body.find(';');
        if (semi == std::string_view::npos || body.substr(semi + 1, 5) != "tail=") {
            throw InputError("table sigma needs the form table:v0,v1,...;tail=t");
        }
        std::vector<Rational> values;
        std::string_view list = body.substr(0, semi);
        while (!list.empty()) {
            const auto comma = list.find(',');
            values.push_back(parse_rational(list.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            list.remove_prefix(comma + 1);
        }
        return table(std::move(values), parse_rational(body.substr(semi + 6)));
    }
    throw InputError("unknown sigma form '" + std::string(head) + "'");
}

Rational ErrorFunction::operator()(std::uint64_t n) const {
    switch (kind_) {
        case Kind::constant: return c_;
        case Kind::inverse: return c_ / Rational(BigInt(n) + 1);
        case Kind::inverse_square: {
            const BigInt d = BigInt(n) + 1;
            return c_ / Rational(d * d);
        }
        case Kind::table: return n < table_.size() ? table_[n] : c_;
    }
    return c_;
}

bool ErrorFunction::is_decreasing(std::uint64_t upto) const {
    if (kind_ != Kind::table) return true;
    const std::uint64_t last = std::min<std::uint64_t>(upto, table_.size());
    for (std::uint64_t n = 1; n <= last; ++n) {
        if ((*this)(n) > (*this)(n - 1)) return false;
    }
    return true;
}

ErrorFunction ErrorFunction::running_min() const {
    if (kind_ != Kind::table) return *this;
    ErrorFunction f = *this;
    for (std::size_t i = 1; i < f.table_.size(); ++i) f.table_[i] = std::min(f.table_[i], f.table_[i - 1]);
    if (!f.table_.empty()) f.c_ = std::min(f.c_, f.table_.back());
    return f;
}

std::string ErrorFunction::to_string() const {
    switch (kind_) {
        case Kind::constant: return "const:" + stabreg::to_string(c_);
        case Kind::inverse: return "inverse:" + stabreg::to_string(c_);
        case Kind::inverse_square: return "inverse_square:" + stabreg::to_string(c_);
        case Kind::table: {
            std::string out = "table:";
            for (std::size_t i = 0; i < table_.size(); ++i) {
                if (i) out += ",";
                out += stabreg::to_string(table_[i]);
            }
            return out + ";tail=" + stabreg::to_string(c_);
        }
    }
    return {};
}

std::uint64_t refinement_part_bound(std::uint64_t m, const Rational& eps) {
    if (eps <= 0) throw InputError("epsilon must be positive");
    const Rational bound = floor(Rational(2) * Rational(BigInt(m) * m) / eps);
    return static_cast<std::uint64_t>(to_int64(bound));
}

Rational refinement_tau(std::uint64_t m, const Rational& eps, const ErrorFunction& sigma) {
    if (m == 0) throw InputError("tau(m) needs m >= 1");
    const Rational s = sigma(refinement_part_bound(m, eps));
    return eps * s * s / Rational(8 * BigInt(m));
}

}  // namespace stabreg
