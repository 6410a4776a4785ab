#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fockdual {

// Exact rational with int64 numerator/denominator and __int128 intermediates.
// Every value in this problem domain is an integer or half-integer, and the
// linear algebra acts on small structured systems, so reduced values stay far
// below the int64 range. If an operation would leave that range we throw
// instead of silently losing exactness.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    reduce_from(n, d);
  }

  static Rat half(long long n) { return Rat(n, 2); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_half_odd_integer() const { return den_ == 2; }

  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rat& operator+=(const Rat& o) {
    i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
    i128 d = i128(den_) * o.den_;
    reduce_from(n, d);
    return *this;
  }
  Rat& operator-=(const Rat& o) { return *this += (-o); }
  Rat& operator*=(const Rat& o) {
    i128 n = i128(num_) * o.num_;
    i128 d = i128(den_) * o.den_;
    reduce_from(n, d);
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    if (o.num_ == 0) throw std::invalid_argument("Rat: division by zero");
    i128 n = i128(num_) * o.den_;
    i128 d = i128(den_) * o.num_;
    reduce_from(n, d);
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    i128 l = i128(a.num_) * b.den_;
    i128 r = i128(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  Rat abs() const { return num_ < 0 ? -*this : *this; }
  Rat inv() const { return Rat(1) / *this; }

  // "5", "-3/2"
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }
  static Rat parse(const std::string& s);

 private:
  using i128 = __int128;

  void reduce_from(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    n /= g;
    d /= g;
    constexpr i128 lo = std::numeric_limits<long long>::min();
    constexpr i128 hi = std::numeric_limits<long long>::max();
    if (n < lo || n > hi || d > hi) throw std::overflow_error("Rat: value outside int64 range");
    num_ = static_cast<long long>(n);
    den_ = static_cast<long long>(d);
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  long long num_ = 0;
  long long den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace fockdual
