#include "banet/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

#include "banet/error.hpp"

namespace banet {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("rational overflow in multiplication");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("rational overflow in addition");
  return out;
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError("integer out of range in '" + std::string(whole) + "'", 0, 0);
  }
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("malformed rational '" + std::string(whole) + "'", 0, 0);
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator) : num_(numerator), den_(1) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error("rational with zero denominator");
  if (denominator < 0) {
    numerator = checked_mul(numerator, -1);
    denominator = checked_mul(denominator, -1);
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational Rational::operator-() const { return Rational(checked_mul(num_, -1), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  const std::int64_t g = std::gcd(den_, rhs.den_);
  const std::int64_t lhs_scale = rhs.den_ / g;
  const std::int64_t rhs_scale = den_ / g;
  *this = Rational(checked_add(checked_mul(num_, lhs_scale), checked_mul(rhs.num_, rhs_scale)),
                   checked_mul(den_, lhs_scale));
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  // Cross-reduce first so intermediate products stay small.
  const std::int64_t g1 = std::gcd(num_, rhs.den_);
  const std::int64_t g2 = std::gcd(rhs.num_, den_);
  const std::int64_t a = g1 == 0 ? num_ : num_ / g1;
  const std::int64_t d = g1 == 0 ? rhs.den_ : rhs.den_ / g1;
  const std::int64_t c = g2 == 0 ? rhs.num_ : rhs.num_ / g2;
  const std::int64_t b = g2 == 0 ? den_ : den_ / g2;
  *this = Rational(checked_mul(a, c), checked_mul(b, d));
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const __int128 l = static_cast<__int128>(lhs.num_) * rhs.den_;
  const __int128 r = static_cast<__int128>(rhs.num_) * lhs.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational", 0, 0);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_int(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
      throw ParseError("denominator must be an unsigned integer in '" + std::string(text) + "'", 0, 0);
    }
    const std::int64_t den = parse_int(den_text, text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0, 0);
    return Rational(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if (frac_part.empty() || frac_part.find_first_not_of("0123456789") != std::string_view::npos ||
        int_part.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError("malformed rational '" + std::string(text) + "'", 0, 0);
    }
    std::int64_t scale = 1;
    for (std::size_t k = 0; k < frac_part.size(); ++k) scale = checked_mul(scale, 10);
    const std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
    const std::int64_t frac = parse_int(frac_part, text);
    Rational value(checked_add(checked_mul(whole, scale), frac), scale);
    return negative ? -value : value;
  }
  return Rational(parse_int(text, text));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  return checked_mul(a / std::gcd(a, b), b);
}

}  // namespace banet
