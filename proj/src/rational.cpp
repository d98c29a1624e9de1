#include "linespace/rational.hpp"

#include <charconv>
#include <limits>

namespace linespace {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::BadInput: return "BadInput";
    case Errc::Asymmetric: return "Asymmetric";
    case Errc::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case Errc::NonzeroDiagonal: return "NonzeroDiagonal";
    case Errc::NegativeDistance: return "NegativeDistance";
    case Errc::TriangleViolation: return "TriangleViolation";
    case Errc::Disconnected: return "Disconnected";
    case Errc::SamePoint: return "SamePoint";
    case Errc::BadParams: return "BadParams";
    case Errc::NoValidParams: return "NoValidParams";
    case Errc::OddP: return "OddP";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotThreeUniform: return "NotThreeUniform";
    case Errc::Overflow: return "Overflow";
    case Errc::TheoremViolated: return "TheoremViolated";
    case Errc::BoundViolated: return "BoundViolated";
    case Errc::SelfCheckFailed: return "SelfCheckFailed";
  }
  return "Unknown";
}

namespace {

__int128 gcd_wide(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw Error(Errc::BadInput, "not a rational: \"" + std::string(whole) + "\"");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw Error(Errc::BadInput, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) throw Error(Errc::Overflow, "rational exceeds 64-bit range");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw Error(Errc::BadInput, "zero denominator in \"" + std::string(text) + "\"");
  return Rational(num, den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(static_cast<__int128>(a.num_) + b.num_, 1);
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

}  // namespace linespace
