#pragma once

// Exact rational numbers. Values that fit in 64-bit numerator/denominator are
// kept inline; anything larger is promoted to a shared immutable GMP rational.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace hopfcyclic {

class RationalField;

class Rational {
 public:
  using field_type = RationalField;

  Rational() noexcept = default;
  Rational(long long n) {  // NOLINT(google-explicit-constructor)
    if (n == std::numeric_limits<long long>::min()) {
      set_big(mpq_class(mpz_class(static_cast<long>(n))));
    } else {
      num_ = n;
    }
  }
  Rational(int n) : Rational(static_cast<long long>(n)) {}  // NOLINT
  Rational(long long n, long long d) {
    if (d == 0) throw Error(ErrorCode::division_by_zero, "rational with zero denominator");
    *this = from_wide(n, d);
  }
  explicit Rational(const mpq_class& q) { assign_mpq(q); }

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

  int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return q;
  }

  Rational inverse() const {
    if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero");
    if (big_) return Rational(mpq_class(1) / *big_);
    return from_wide(den_, num_);
  }

  std::string str() const {
    if (big_) {
      if (big_->get_den() == 1) return big_->get_num().get_str();
      return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    }
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p" or "p/q" with arbitrary-size integers.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
      while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
      while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    };
    trim(s);
    auto valid_int = [](const std::string& t) {
      if (t.empty()) return false;
      std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
      return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    trim(num);
    trim(den);
    if (num.size() > 0 && num[0] == '+') num.erase(num.begin());
    if (den.size() > 0 && den[0] == '+') den.erase(den.begin());
    if (!valid_int(num) || !valid_int(den))
      throw Error(ErrorCode::parse_error, "malformed rational '" + std::string(text) + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw Error(ErrorCode::division_by_zero, "rational '" + std::string(text) + "' has zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
  }

  Rational operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == b.den_) return from_wide(static_cast<Wide>(a.num_) + b.num_, a.den_);
      Wide n = static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_;
      Wide d = static_cast<Wide>(a.den_) * b.den_;
      return from_wide(n, d);
    }
    return Rational(a.to_mpq() + b.to_mpq());
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    if (!a.big_ && !b.big_) {
      long long g1 = gcd64(a.num_, b.den_);
      long long g2 = gcd64(b.num_, a.den_);
      Wide n = static_cast<Wide>(a.num_ / g1) * (b.num_ / g2);
      Wide d = static_cast<Wide>(a.den_ / g2) * (b.den_ / g1);
      return from_wide(n, d);
    }
    return Rational(a.to_mpq() * b.to_mpq());
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical form: a small value is never stored big
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  friend bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return static_cast<Wide>(a.num_) * b.den_ < static_cast<Wide>(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using Wide = __int128;
  using UWide = unsigned __int128;

  static long long gcd64(long long a, long long b) {
    unsigned long long x = a < 0 ? 0ULL - static_cast<unsigned long long>(a) : a;
    unsigned long long y = b < 0 ? 0ULL - static_cast<unsigned long long>(b) : b;
    while (y != 0) {
      auto t = x % y;
      x = y;
      y = t;
    }
    return x == 0 ? 1 : static_cast<long long>(x);
  }

  static UWide gcd128(UWide a, UWide b) {
    while (b != 0) {
      UWide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static mpz_class to_mpz(Wide v) {
    bool neg = v < 0;
    UWide u = neg ? UWide(0) - static_cast<UWide>(v) : static_cast<UWide>(v);
    auto hi = static_cast<unsigned long>(u >> 64);
    auto lo = static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL);
    mpz_class z(hi);
    z <<= 64;
    z += lo;
    return neg ? mpz_class(-z) : z;
  }

  static Rational from_wide(Wide n, Wide d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Rational r;
    if (n == 0) return r;
    UWide un = n < 0 ? UWide(0) - static_cast<UWide>(n) : static_cast<UWide>(n);
    UWide g = gcd128(un, static_cast<UWide>(d));
    n /= static_cast<Wide>(g);
    d /= static_cast<Wide>(g);
    constexpr Wide kMax = std::numeric_limits<long long>::max();
    if (n <= kMax && n >= -kMax && d <= kMax) {
      r.num_ = static_cast<long long>(n);
      r.den_ = static_cast<long long>(d);
      return r;
    }
    r.set_big(mpq_class(to_mpz(n), to_mpz(d)));
    return r;
  }

  void assign_mpq(const mpq_class& q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
      num_ = n.get_si();
      den_ = d.get_si();
      big_.reset();
    } else {
      set_big(q);
    }
  }

  void set_big(mpq_class q) {
    q.canonicalize();
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(q));
  }

  long long num_ = 0;
  long long den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace hopfcyclic
