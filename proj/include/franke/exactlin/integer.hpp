#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace franke::exactlin {

// Arbitrary precision; small values stay in the inline limb buffer.
using Integer = boost::multiprecision::cpp_int;

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Representative of a in [0, m) for m > 0.
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

inline bool is_unit(const Integer& a) { return a == 1 || a == -1; }

inline std::string to_string(const Integer& a) { return a.str(); }

inline Integer from_string(const std::string& s) { return Integer(s); }

// Sign (-1)^k for any integer k.
inline int parity_sign(long long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace franke::exactlin
