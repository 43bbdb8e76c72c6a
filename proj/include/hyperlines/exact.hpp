#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperlines/error.hpp"

// Exact integer/rational arithmetic and certified comparisons against
// base-2 logarithms. Decisions never go through floating point; doubles
// only appear in display helpers.
namespace hyperlines {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(std::uint64_t e) { return BigInt(1) << static_cast<unsigned>(e); }

inline BigInt ipow(const BigInt& base, std::uint64_t e) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

inline BigInt floor_of(const Rational& r) {
  BigInt q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
  if (r < 0 && Rational(q) != r) q -= 1;
  return q;
}

inline BigInt ceil_of(const Rational& r) {
  BigInt f = floor_of(r);
  return Rational(f) == r ? f : f + 1;
}

inline bool is_pow2(const BigInt& x) { return x > 0 && (x & (x - 1)) == 0; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline double lg_double(const BigInt& x) {
  if (x <= 0) return -INFINITY;
  unsigned k = boost::multiprecision::msb(x);
  if (k < 60) return std::log2(x.convert_to<double>());
  BigInt top = x >> (k - 52);
  return std::log2(top.convert_to<double>()) + static_cast<double>(k - 52);
}

inline double lg_double(const Rational& x) {
  return lg_double(boost::multiprecision::numerator(x)) - lg_double(boost::multiprecision::denominator(x));
}

inline std::string to_string(const BigInt& x) { return x.str(); }

/// "p" or "p/q" in lowest terms.
inline std::string to_string(const Rational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Accepts integers, "p/q" and finite decimals such as "0.125".
inline Rational parse_rational(std::string_view text) {
  auto bad = [&]() { return Error(ErrorKind::invalid_argument, "not a rational number: '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s) -> BigInt {
    if (s.empty()) throw bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw bad();
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') throw bad();
    BigInt v(std::string(s.substr(i)));
    return s[0] == '-' ? BigInt(-v) : v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole = "0";
    if (frac.empty()) throw bad();
    BigInt w = parse_int(whole);
    BigInt f = parse_int(frac);
    if (f < 0 || frac[0] == '-' || frac[0] == '+') throw bad();
    BigInt scale = ipow(10, frac.size());
    BigInt magnitude = (w < 0 ? BigInt(-w) : w) * scale + f;
    return Rational(negative ? BigInt(-magnitude) : magnitude, scale);
  }
  return Rational(parse_int(text));
}

namespace detail {

/// Certified enclosure lo <= lg(x) <= hi for a positive rational x using
/// `bits` rounds of fixed-point squaring, with the lower track rounded down
/// and the upper track rounded up.
inline std::pair<Rational, Rational> lg_bracket(const Rational& x, unsigned bits) {
  BigInt u = boost::multiprecision::numerator(x);
  BigInt v = boost::multiprecision::denominator(x);
  long k = static_cast<long>(boost::multiprecision::msb(u)) - static_cast<long>(boost::multiprecision::msb(v));
  auto scaled_ge = [&](long e) {  // u >= v * 2^e
    return e >= 0 ? u >= (v << static_cast<unsigned>(e)) : (u << static_cast<unsigned>(-e)) >= v;
  };
  if (!scaled_ge(k)) --k;

  const unsigned precision = 2 * bits + 64;
  // y = x / 2^k in [1, 2), as a fixed-point value with `precision` fraction bits.
  BigInt num = u, den = v;
  long shift = static_cast<long>(precision) - k;
  if (shift >= 0)
    num <<= static_cast<unsigned>(shift);
  else
    den <<= static_cast<unsigned>(-shift);
  BigInt low = num / den;
  BigInt high = ceil_div(num, den);

  const BigInt two = BigInt(2) << precision;
  BigInt low_bits = 0, high_bits = 0;
  for (unsigned i = 0; i < bits; ++i) {
    low = (low * low) >> precision;
    high = ceil_div(high * high, BigInt(1) << precision);
    low_bits <<= 1;
    high_bits <<= 1;
    if (low >= two) {
      low >>= 1;
      low_bits += 1;
    }
    if (high >= two) {
      high = ceil_div(high, 2);
      high_bits += 1;
    }
  }
  BigInt scale = pow2(bits);
  return {Rational(k) + Rational(low_bits, scale), Rational(k) + Rational(high_bits + 1, scale)};
}

}  // namespace detail

/// Sign of r - lg(x) for rational r and positive rational x, decided exactly.
inline int compare_with_lg(const Rational& r, const Rational& x) {
  if (x <= 0) throw Error(ErrorKind::invalid_argument, "lg of a nonpositive number");
  const BigInt& u = boost::multiprecision::numerator(x);
  const BigInt& v = boost::multiprecision::denominator(x);
  if (is_pow2(u) && is_pow2(v)) {
    Rational exact = Rational(static_cast<long>(boost::multiprecision::msb(u))) -
                     Rational(static_cast<long>(boost::multiprecision::msb(v)));
    return r < exact ? -1 : (r > exact ? 1 : 0);
  }
  // lg x is irrational here, so the loop always terminates.
  for (unsigned bits = 64;; bits *= 2) {
    auto [lo, hi] = detail::lg_bracket(x, bits);
    if (r < lo) return -1;
    if (r > hi) return 1;
  }
}

inline int compare_with_lg(const Rational& r, const BigInt& x) { return compare_with_lg(r, Rational(x)); }

}  // namespace hyperlines
