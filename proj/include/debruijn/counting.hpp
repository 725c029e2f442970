#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "debruijn/error.hpp"
#include "debruijn/graph.hpp"

namespace debruijn {

/// Exact cycle counts. (d!)^(d^(k-1)) overflows 64-bit arithmetic already for
/// modest orders, so no fixed-width type appears anywhere in counting.
using CycleCount = boost::multiprecision::cpp_int;

namespace detail {

inline CycleCount exact_quotient(CycleCount num, const CycleCount& den, const char* what) {
  CycleCount q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw invariant_violation(std::string(what) + ": division not exact");
  return q;
}

// Exponents beyond this make the power astronomically large; refuse instead
// of hanging.
inline constexpr std::int64_t kMaxCountExponent = std::int64_t{1} << 22;

}  // namespace detail

/// Number of de Bruijn cycles of order k over a d-letter alphabet:
/// (d!)^(d^(k-1)) / d^k, evaluated exactly.
inline CycleCount count_formula(std::int64_t d, std::int64_t k) {
  if (d < 2) throw invalid_input("count requires d >= 2, got " + std::to_string(d));
  if (k < 1) throw invalid_input("count requires k >= 1, got " + std::to_string(k));
  std::int64_t exponent = 1;
  for (std::int64_t i = 0; i < k - 1; ++i) {
    if (exponent > detail::kMaxCountExponent / d)
      throw invalid_input("d^(k-1) too large to evaluate exactly");
    exponent *= d;
  }
  CycleCount factorial = 1;
  for (std::int64_t i = 2; i <= d; ++i) factorial *= i;
  CycleCount value = boost::multiprecision::pow(factorial, static_cast<unsigned>(exponent));
  for (std::int64_t i = 0; i < k; ++i)
    value = detail::exact_quotient(std::move(value), CycleCount(d), "count_formula");
  return value;
}

/// Number of cross-join pairs of a maximal-period binary LFSR of order k:
/// (2^(k-1) - 1)(2^(k-1) - 2) / 6.
inline CycleCount chang_count(std::int64_t k) {
  if (k < 2) throw invalid_input("cross-join pair count requires k >= 2, got " + std::to_string(k));
  if (k - 1 > detail::kMaxCountExponent) throw invalid_input("k too large to evaluate exactly");
  const CycleCount half = boost::multiprecision::pow(CycleCount(2), static_cast<unsigned>(k - 1));
  return detail::exact_quotient((half - 1) * (half - 2), CycleCount(6), "chang_count");
}

/// k such that N = d^k, when one exists.
inline std::optional<std::int64_t> power_order(const DigraphParams& p) {
  Vertex v = p.d;
  std::int64_t k = 1;
  while (v < p.n) {
    v *= p.d;
    ++k;
  }
  if (v == p.n) return k;
  return std::nullopt;
}

}  // namespace debruijn
