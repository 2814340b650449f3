#include "satnum/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace satnum {
namespace {

__extension__ typedef __int128 wide_int;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("rational overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("rational overflow");
  return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = checked_mul(num, -1);
    den = checked_mul(den, -1);
  }
  const auto g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::floor() const noexcept {
  auto q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const noexcept {
  auto q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  const auto g = std::gcd(a.den_, b.den_);
  const auto lhs = checked_mul(a.num_, b.den_ / g);
  const auto rhs = checked_mul(b.num_, a.den_ / g);
  return {checked_add(lhs, rhs), checked_mul(a.den_ / g, b.den_)};
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  const auto g1 = std::gcd(a.num_, b.den_);
  const auto g2 = std::gcd(b.num_, a.den_);
  const auto d1 = g1 == 0 ? 1 : g1;
  const auto d2 = g2 == 0 ? 1 : g2;
  return {checked_mul(a.num_ / d1, b.num_ / d2), checked_mul(a.den_ / d2, b.den_ / d1)};
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("rational division by zero");
  return a * Rational(b.den_, b.num_);
}

Rational Rational::operator-() const {
  Rational out;
  out.num_ = checked_mul(num_, -1);
  out.den_ = den_;
  return out;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const wide_int lhs = static_cast<wide_int>(a.num_) * b.den_;
  const wide_int rhs = static_cast<wide_int>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace satnum
