#include "rlcm/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace rlcm {

Interval operator*(const Interval& x, const Interval& y) {
  Rational a = x.lo * y.lo;
  Rational b = x.lo * y.hi;
  Rational c = x.hi * y.lo;
  Rational d = x.hi * y.hi;
  return {std::min(std::min(a, b), std::min(c, d)),
          std::max(std::max(a, b), std::max(c, d))};
}

Interval reciprocal(const Interval& x) {
  if (x.lo <= 0 && x.hi >= 0)
    throw std::domain_error("reciprocal of interval containing zero");
  return {Rational(1) / x.hi, Rational(1) / x.lo};
}

bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

Rational pow_rational(const Rational& base, long long e) {
  if (e == 0) return 1;
  if (e < 0) {
    if (base == 0) throw std::domain_error("0 to negative power");
    return Rational(1) / pow_rational(base, -e);
  }
  Rational acc = 1, b = base;
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

namespace {

BigInt ipow(BigInt b, BigInt e) {
  BigInt acc = 1;
  while (e > 0) {
    if ((e & 1) != 0) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

// Integer q-th root: largest r with r^q <= n.
BigInt iroot(const BigInt& n, const BigInt& q) {
  if (n <= 1) return n;
  BigInt lo = 1, hi = 2;
  while (ipow(hi, q) <= n) hi <<= 1;
  while (lo + 1 < hi) {
    BigInt mid = (lo + hi) >> 1;
    if (ipow(mid, q) <= n) lo = mid; else hi = mid;
  }
  return lo;
}

}  // namespace

Interval pow_enclosure(unsigned long long n, const Rational& x, unsigned bits) {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  if (n == 0) throw std::domain_error("pow_enclosure: n must be >= 1");
  BigInt p = numerator(x);
  BigInt q = denominator(x);
  bool neg = p < 0;
  if (neg) p = -p;
  if (n == 1 || p == 0) return {Rational(1)};
  if (q == 1) {
    Rational v = pow_rational(Rational(n), static_cast<long long>(p));
    if (neg) v = Rational(1) / v;
    return {v};
  }
  // Bracket y = n^(p/q): y^q = N with N = n^p.
  BigInt N = ipow(BigInt(n), p);
  BigInt r = iroot(N, q);
  Rational lo(r), hi(r + 1);
  if (ipow(r, q) == N) hi = lo;  // perfect power
  // Bisect until hi - lo <= lo * 2^-bits; mid^q vs N compared exactly.
  while ((hi - lo) * pow_rational(Rational(2), static_cast<long long>(bits)) > lo) {
    Rational mid = (lo + hi) / 2;
    if (pow_rational(mid, static_cast<long long>(q)) <= Rational(N)) lo = mid; else hi = mid;
  }
  Interval y{lo, hi};
  if (neg) y = reciprocal(y);
  return y;
}

std::string to_string(const Rational& r) {
  return r.str();
}

}  // namespace rlcm
