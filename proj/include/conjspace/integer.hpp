#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace conjspace {

/// Exact integer used throughout the library. Never wraps.
using Int = boost::multiprecision::cpp_int;

using IntVector = std::vector<Int>;

/// Representative of a mod m in [0, m).
inline Int pmod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline bool is_odd(const Int& a) { return bit_test(abs(a), 0); }
inline bool is_even(const Int& a) { return !is_odd(a); }

/// Floor division (rounds toward negative infinity).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// a / b, throwing when the division leaves a remainder.
inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("exact_div: division by zero");
  if (a % b != 0)
    throw std::domain_error("exact_div: " + a.str() + " is not divisible by " + b.str());
  return a / b;
}

/// Extended gcd: returns g >= 0 with x*a + y*b = g.
inline Int xgcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

inline bool fits_int64(const Int& a) {
  return a >= std::numeric_limits<std::int64_t>::min() &&
         a <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const Int& a) {
  if (!fits_int64(a)) throw std::overflow_error("integer " + a.str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(a);
}

inline Int binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Int r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r *= static_cast<unsigned long long>(n - i);
    r /= static_cast<unsigned long long>(i + 1);
  }
  return r;
}

inline std::size_t binomial_size(std::size_t n, std::size_t k) {
  return static_cast<std::size_t>(binomial(n, k));
}

inline IntVector unit_vector(std::size_t n, std::size_t i, const Int& scale = 1) {
  IntVector v(n, 0);
  v.at(i) = scale;
  return v;
}

inline IntVector operator+(IntVector a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline IntVector operator-(IntVector a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline IntVector operator*(const Int& s, IntVector a) {
  for (auto& x : a) x *= s;
  return a;
}

inline Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Int r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

inline std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace conjspace
