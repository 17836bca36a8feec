#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace rlcm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Closed rational interval. Width-0 intervals are exact values.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational v) : lo(v), hi(std::move(v)) {}
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

  friend Interval operator+(const Interval& x, const Interval& y) {
    return {x.lo + y.lo, x.hi + y.hi};
  }
  friend Interval operator-(const Interval& x, const Interval& y) {
    return {x.lo - y.hi, x.hi - y.lo};
  }
  // Multiplication for arbitrary sign intervals.
  friend Interval operator*(const Interval& x, const Interval& y);
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Reciprocal of an interval that does not contain 0.
Interval reciprocal(const Interval& x);

bool is_integer(const Rational& r);

// base^e for integer e (e may be negative; base != 0 then).
Rational pow_rational(const Rational& base, long long e);

// Enclosure of n^x for n >= 1 and rational x (any sign), relative width <= 2^-bits.
// Exact (width 0) when x is an integer.
Interval pow_enclosure(unsigned long long n, const Rational& x, unsigned bits = 48);

std::string to_string(const Rational& r);

}  // namespace rlcm
