#pragma once

#include <cstdint>
#include <string>

#include "hyperlines/exact.hpp"

namespace hyperlines {

/// sum_{i=0}^{k} C(N, i), exactly.
inline BigInt binomial_tail(std::int64_t big_n, std::int64_t k) {
  if (big_n < 0 || k < 0 || k > big_n)
    throw Error(ErrorKind::invalid_argument,
                "binomial_tail needs 0 <= k <= N, got N=" + std::to_string(big_n) + " k=" + std::to_string(k));
  BigInt term = 1, sum = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    term = term * (big_n - i + 1) / i;
    sum += term;
  }
  return sum;
}

struct BernsteinCheck {
  BigInt tail;
  /// (N/k)^k (N/(N-k))^(N-k) = N^N / (k^k (N-k)^(N-k)), kept exact.
  Rational bound;
  bool holds = false;
};

/// Checks sum_{i<=k} C(N,i) <= (N/k)^k (N/(N-k))^(N-k) for 1 <= k <= N/2.
/// The right side is a rational number, so the comparison is done by cross
/// multiplication with no rounding at all.
inline BernsteinCheck check_bernstein(std::int64_t big_n, std::int64_t k) {
  if (k < 1 || 2 * k > big_n)
    throw Error(ErrorKind::out_of_range,
                "Bernstein check needs 1 <= k <= N/2, got N=" + std::to_string(big_n) + " k=" + std::to_string(k));
  BernsteinCheck out;
  out.tail = binomial_tail(big_n, k);
  BigInt numerator = ipow(BigInt(big_n), static_cast<std::uint64_t>(big_n));
  BigInt denominator = ipow(BigInt(k), static_cast<std::uint64_t>(k)) *
                       ipow(BigInt(big_n - k), static_cast<std::uint64_t>(big_n - k));
  out.bound = Rational(numerator, denominator);
  out.holds = out.tail * denominator <= numerator;
  return out;
}

/// e <= kEulerUpper; the tail-bound criterion below only ever uses e from above.
inline const Rational kEulerUpper{271828183, 100000000};

/// Sufficient criterion delta*(1 - ln delta) <= eps*ln 2, evaluated in the
/// equivalent form delta * lg(e/delta) <= eps with e rounded up, which only
/// makes the left side larger.
inline bool delta_criterion_holds(const Rational& delta, const Rational& epsilon) {
  if (delta <= 0 || epsilon <= 0) return false;
  // delta * lg(E/delta) <= eps  <=>  eps/delta >= lg(E/delta)
  return compare_with_lg(epsilon / delta, kEulerUpper / delta) >= 0;
}

/// Returns a dyadic delta in (0, 1/2] meeting delta_criterion_holds. The
/// left side is increasing in delta on (0, 1/2], so a binary search over a
/// dyadic grid finds the largest grid point; the grid is refined until the
/// answer carries at least ten significant bits. Not claimed maximal.
inline Rational delta_for_epsilon(const Rational& epsilon) {
  if (epsilon <= 0) throw Error(ErrorKind::invalid_epsilon, "epsilon must be positive, got " + to_string(epsilon));
  const Rational half(1, 2);
  if (delta_criterion_holds(half, epsilon)) return half;
  for (unsigned grid_bits = 16;; grid_bits += 16) {
    BigInt scale = pow2(grid_bits);
    BigInt lo = 0, hi = scale / 2;  // invariant: lo feasible (or 0), hi infeasible
    while (hi - lo > 1) {
      BigInt mid = (lo + hi) / 2;
      if (delta_criterion_holds(Rational(mid, scale), epsilon))
        lo = mid;
      else
        hi = mid;
    }
    if (lo >= 1024) return Rational(lo, scale);
  }
}

/// Checks sum_{i < delta*N} C(N, i) <= 2^(eps*N) exactly.
inline bool tail_condition_holds(const Rational& delta, const Rational& epsilon, std::int64_t big_n) {
  // i < delta*N  <=>  i <= ceil(delta*N) - 1
  BigInt last = ceil_of(delta * big_n) - 1;
  if (last < 0) return true;  // empty sum
  BigInt k = last > big_n ? BigInt(big_n) : last;
  BigInt tail = binomial_tail(big_n, k.convert_to<std::int64_t>());
  // tail <= 2^(a N / b)  <=>  tail^b <= 2^(a N)
  const BigInt& a = boost::multiprecision::numerator(epsilon);
  const BigInt& b = boost::multiprecision::denominator(epsilon);
  return ipow(tail, b.convert_to<std::uint64_t>()) <= pow2((a * big_n).convert_to<std::uint64_t>());
}

struct TailBoundParams {
  Rational epsilon;
  Rational delta;
};

inline TailBoundParams make_tail_bound_params(const Rational& epsilon) {
  return {epsilon, delta_for_epsilon(epsilon)};
}

}  // namespace hyperlines
