#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace semicoh {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline int sgn(const Int& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
inline int sgn(const Rat& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// floor/ceil of a rational as exact integers
inline Int rat_floor(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int r = n / d;
  if (r * d > n) --r;
  return r;
}
inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline IntVec operator*(const Int& c, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}
inline IntVec operator-(const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

// divide by gcd of entries; sign left untouched (zero vector stays zero)
inline IntVec primitive(IntVec v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

inline IntVec int_vec(std::initializer_list<long> xs) {
  IntVec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace semicoh
