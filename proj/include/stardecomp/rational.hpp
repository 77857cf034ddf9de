#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace stardecomp {

// Exact rational on 64-bit words, always normalized with den > 0.
// Every quantity in this library is tiny (densities 2m/k, charges in
// elevenths/sevenths/thirds), so 64-bit words with 128-bit intermediates
// are exact; asserts guard the word size instead of a bignum fallback.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  static Rational from_cross(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n;
    __int128 g = gcd128(a, d);
    if (g > 1) { n /= g; d /= g; }
    assert(fits(n) && fits(d));
    Rational r;
    r.num = (long long)n;
    r.den = (long long)d;
    if (r.num == 0) r.den = 1;
    return r;
  }

  Rational operator+(const Rational& o) const {
    return from_cross((__int128)num * o.den + (__int128)o.num * den,
                      (__int128)den * o.den);
  }
  Rational operator-(const Rational& o) const {
    return from_cross((__int128)num * o.den - (__int128)o.num * den,
                      (__int128)den * o.den);
  }
  Rational operator*(const Rational& o) const {
    return from_cross((__int128)num * o.num, (__int128)den * o.den);
  }
  Rational operator/(const Rational& o) const {
    if (o.num == 0) throw std::domain_error("rational division by zero");
    return from_cross((__int128)num * o.den, (__int128)den * o.num);
  }
  Rational operator-() const { Rational r = *this; r.num = -r.num; return r; }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return (__int128)num * o.den < (__int128)o.num * den;
  }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Parses "p/q" or a bare integer "p".
  static Rational parse(const std::string& s) {
    size_t slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(s));
      return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad rational: " + s);
    }
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b) { __int128 t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
  }
  static bool fits(__int128 v) {
    return v >= INT64_MIN && v <= INT64_MAX;
  }
};

}  // namespace stardecomp
