#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgclass/error.hpp"

namespace sgclass {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Fixed-width helpers. Every overflow is reported, never wrapped.

[[noreturn]] void throw_overflow(const char* op);

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow("add");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw_overflow("sub");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow("mul");
  return r;
}

inline Int narrow(const BigInt& v) {
  if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) throw_overflow("narrow");
  return static_cast<Int>(v);
}

inline Int narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw_overflow("narrow");
  return static_cast<Int>(v);
}

/// Floor division for b > 0.
inline __int128 floor_div(__int128 a, __int128 b) {
  __int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt floor_of(const Rational& q) {
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  BigInt f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

}  // namespace sgclass
