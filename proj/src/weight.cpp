#include "gmatch/weight.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace gmatch {

namespace {

using wide = __int128;

wide wide_gcd(wide a, wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(wide v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("malformed weight '" + std::string(whole) + "'");
    }
    return value;
}

} // namespace

Weight::Weight(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::domain_error("weight with zero denominator");
    *this = from_wide(numerator, denominator);
}

Weight Weight::from_wide(wide num, wide den) {
    if (den == 0) throw std::domain_error("weight with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    wide g = wide_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    if (!fits(num) || !fits(den)) throw std::overflow_error("weight arithmetic overflow");
    Weight w;
    w.num_ = static_cast<std::int64_t>(num);
    w.den_ = static_cast<std::int64_t>(den);
    return w;
}

Weight Weight::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Weight(parse_int(text, text));
    std::int64_t num = parse_int(text.substr(0, slash), text);
    std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den <= 0) throw std::invalid_argument("weight denominator must be positive in '" + std::string(text) + "'");
    return Weight(num, den);
}

std::string Weight::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

double Weight::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

Weight& Weight::operator+=(const Weight& rhs) {
    *this = from_wide(wide(num_) * rhs.den_ + wide(rhs.num_) * den_, wide(den_) * rhs.den_);
    return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
    *this = from_wide(wide(num_) * rhs.den_ - wide(rhs.num_) * den_, wide(den_) * rhs.den_);
    return *this;
}

Weight operator*(const Weight& lhs, const Weight& rhs) {
    return Weight::from_wide(wide(lhs.num_) * rhs.num_, wide(lhs.den_) * rhs.den_);
}

Weight operator/(const Weight& lhs, const Weight& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("division by zero weight");
    return Weight::from_wide(wide(lhs.num_) * rhs.den_, wide(lhs.den_) * rhs.num_);
}

std::strong_ordering operator<=>(const Weight& lhs, const Weight& rhs) {
    // Denominators are positive, so cross-multiplication preserves order.
    wide l = wide(lhs.num_) * rhs.den_;
    wide r = wide(rhs.num_) * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
    return os << w.to_string();
}

} // namespace gmatch
