#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "debruijn/error.hpp"

namespace debruijn {

using Vertex = std::int64_t;

namespace detail {

// Solves a*x == 1 (mod m) for gcd(a, m) == 1, m >= 1.
inline Vertex mod_inverse(Vertex a, Vertex m) {
  Vertex old_r = a % m, r = m;
  Vertex old_s = 1, s = 0;
  while (r != 0) {
    Vertex q = old_r / r;
    Vertex tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1 && old_r != -1) throw invariant_violation("mod_inverse: arguments not coprime");
  if (old_r == -1) old_s = -old_s;
  return ((old_s % m) + m) % m;
}

}  // namespace detail

/// Parameters (N, d) of the digraph on vertices {0, ..., N-1} whose edges are
/// x -> d*x + r (mod N) for r = 0, ..., d-1.
struct DigraphParams {
  Vertex n;
  Vertex d;

  // Kept well below the point where d*x + r could overflow 64-bit arithmetic.
  static constexpr Vertex kMaxN = Vertex{1} << 31;

  DigraphParams(Vertex n_, Vertex d_) : n(n_), d(d_) {
    if (d < 2) throw invalid_input("degree d must be at least 2, got " + std::to_string(d));
    if (n < d)
      throw invalid_input("vertex count N must be at least d, got N=" + std::to_string(n) +
                          ", d=" + std::to_string(d));
    if (n > kMaxN) throw invalid_input("vertex count N too large: " + std::to_string(n));
  }

  bool divides() const noexcept { return n % d == 0; }

  /// The conjugacy modulus N/d. Only meaningful when d | N.
  Vertex modulus() const {
    if (!divides())
      throw unsupported_operation("N/d modulus requires d | N, got N=" + std::to_string(n) +
                                  ", d=" + std::to_string(d));
    return n / d;
  }

  std::string str() const { return "(N=" + std::to_string(n) + ", d=" + std::to_string(d) + ")"; }

  bool operator==(const DigraphParams& o) const noexcept { return n == o.n && d == o.d; }
};

inline void check_vertex(const DigraphParams& p, Vertex x) {
  if (x < 0 || x >= p.n)
    throw invalid_input("vertex " + std::to_string(x) + " out of range for " + p.str());
}

/// The d successors of x in residue order r = 0, ..., d-1.
inline std::vector<Vertex> successors(const DigraphParams& p, Vertex x) {
  check_vertex(p, x);
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(p.d));
  for (Vertex r = 0; r < p.d; ++r) out.push_back((p.d * x + r) % p.n);
  return out;
}

/// The d predecessors of y, ascending. Closed form floor(y/d) + t*N/d when d | N,
/// otherwise by solving d*x == y - r (mod N) over r.
inline std::vector<Vertex> predecessors(const DigraphParams& p, Vertex y) {
  check_vertex(p, y);
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(p.d));
  if (p.divides()) {
    const Vertex base = y / p.d;
    const Vertex step = p.n / p.d;
    for (Vertex t = 0; t < p.d; ++t) out.push_back(base + t * step);
  } else {
    const Vertex g = std::gcd(p.d, p.n);
    const Vertex m = p.n / g;
    const Vertex inv = detail::mod_inverse((p.d / g) % m, m);
    for (Vertex r = 0; r < p.d; ++r) {
      const Vertex c = ((y - r) % p.n + p.n) % p.n;
      if (c % g != 0) continue;
      const Vertex x0 = (c / g % m) * inv % m;
      for (Vertex t = 0; t < g; ++t) out.push_back(x0 + t * m);
    }
    std::sort(out.begin(), out.end());
  }
  if (static_cast<Vertex>(out.size()) != p.d)
    throw invariant_violation("predecessor set of " + std::to_string(y) + " has size " +
                              std::to_string(out.size()) + ", expected d=" + std::to_string(p.d));
  return out;
}

inline bool is_edge(const DigraphParams& p, Vertex x, Vertex y) {
  check_vertex(p, x);
  check_vertex(p, y);
  const Vertex r = ((y - p.d * x) % p.n + p.n) % p.n;
  return r < p.d;
}

/// True when x1 and x2 share at least two successors. When d | N this is
/// exactly the congruence x1 == x2 (mod N/d).
inline bool are_conjugate(const DigraphParams& p, Vertex x1, Vertex x2) {
  check_vertex(p, x1);
  check_vertex(p, x2);
  if (x1 == x2)
    throw invalid_input("conjugacy is a relation between distinct vertices, got " +
                        std::to_string(x1) + " twice");
  if (p.divides()) return (x1 - x2) % (p.n / p.d) == 0;
  auto s1 = successors(p, x1);
  auto s2 = successors(p, x2);
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  std::vector<Vertex> common;
  std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(common));
  return common.size() >= 2;
}

/// True when y1 and y2 share at least two predecessors.
inline bool are_companion(const DigraphParams& p, Vertex y1, Vertex y2) {
  check_vertex(p, y1);
  check_vertex(p, y2);
  if (y1 == y2)
    throw invalid_input("companionship is a relation between distinct vertices, got " +
                        std::to_string(y1) + " twice");
  const auto p1 = predecessors(p, y1);
  const auto p2 = predecessors(p, y2);
  std::vector<Vertex> common;
  std::set_intersection(p1.begin(), p1.end(), p2.begin(), p2.end(), std::back_inserter(common));
  return common.size() >= 2;
}

/// Row x holds successors(x) in residue order.
inline std::vector<std::vector<Vertex>> edge_table(const DigraphParams& p) {
  std::vector<std::vector<Vertex>> rows;
  rows.reserve(static_cast<std::size_t>(p.n));
  for (Vertex x = 0; x < p.n; ++x) rows.push_back(successors(p, x));
  return rows;
}

/// The N/d conjugacy classes {v : v == c (mod N/d)}, each of size d.
/// Conjugacy is transitive only when d | N; otherwise this throws and callers
/// must fall back to pairwise are_conjugate.
inline std::vector<std::vector<Vertex>> conjugate_classes(const DigraphParams& p) {
  if (!p.divides())
    throw unsupported_operation("conjugacy classes require d | N (the relation is not transitive for " +
                                p.str() + ")");
  const Vertex m = p.n / p.d;
  std::vector<std::vector<Vertex>> classes(static_cast<std::size_t>(m));
  for (Vertex c = 0; c < m; ++c) {
    classes[static_cast<std::size_t>(c)].reserve(static_cast<std::size_t>(p.d));
    for (Vertex t = 0; t < p.d; ++t) classes[static_cast<std::size_t>(c)].push_back(c + t * m);
  }
  return classes;
}

}  // namespace debruijn
