#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gmatch {

/// Exact rational number used for edge weights and matching totals.
///
/// Always kept in lowest terms with a positive denominator, so the defaulted
/// equality is value equality. Arithmetic is carried out in 128-bit
/// intermediates and throws std::overflow_error if the reduced result does not
/// fit back into 64 bits.
class Weight {
public:
    constexpr Weight() = default;
    Weight(std::int64_t numerator, std::int64_t denominator = 1);

    /// Accepts "7", "-3" or "3/4". Throws std::invalid_argument otherwise.
    static Weight parse(std::string_view text);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    bool is_positive() const { return num_ > 0; }
    bool is_integer() const { return den_ == 1; }

    std::string to_string() const;
    double to_double() const;

    Weight& operator+=(const Weight& rhs);
    Weight& operator-=(const Weight& rhs);

    friend Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }
    friend Weight operator-(Weight lhs, const Weight& rhs) { return lhs -= rhs; }
    friend Weight operator*(const Weight& lhs, const Weight& rhs);
    /// Throws std::domain_error on division by zero.
    friend Weight operator/(const Weight& lhs, const Weight& rhs);

    friend bool operator==(const Weight&, const Weight&) = default;
    friend std::strong_ordering operator<=>(const Weight& lhs, const Weight& rhs);

private:
    static Weight from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

} // namespace gmatch
