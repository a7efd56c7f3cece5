#pragma once

// Enumeration of GL(n, 2).
//
// A matrix is identified with its row-major bit string; matrices are visited in
// increasing lexicographic order of that string. Each row is packed into an
// unsigned integer whose most significant of the n low bits is column 0, so the
// lexicographic order is the order on the tuple of row values.

#include "conjspace/f2_matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace conjspace {

/// Largest n for which exhaustive GL(n,2) work is allowed unless overridden.
inline constexpr std::size_t kDefaultGlCap = 5;

/// Hard limit of the packed-row representation.
inline constexpr std::size_t kMaxGlDimension = 6;

struct GlCapExceeded : std::length_error {
  using std::length_error::length_error;
};

inline void check_gl_cap(std::size_t n, std::size_t cap) {
  if (n > cap || n > kMaxGlDimension)
    throw GlCapExceeded("GL(" + std::to_string(n) + ",2) exceeds the configured cap " +
                        std::to_string(std::min(cap, kMaxGlDimension)));
}

/// |GL(n,2)| = prod_{i<n} (2^n - 2^i).
inline std::uint64_t gl2_order(std::size_t n) {
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < n; ++i) order *= (std::uint64_t{1} << n) - (std::uint64_t{1} << i);
  return order;
}

using PackedRows = std::vector<std::uint32_t>;

inline F2Matrix unpack_rows(const PackedRows& rows) {
  const std::size_t n = rows.size();
  F2Matrix g(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) g.set(r, c, (rows[r] >> (n - 1 - c)) & 1u);
  return g;
}

namespace detail {

// span is a bitmap over the 2^n vectors: bit v set iff v lies in the span of rows[0..depth)
template <class Visitor>
bool gl2_visit(std::size_t n, std::size_t depth, std::uint64_t span, PackedRows& rows, Visitor& visit) {
  if (depth == n) return visit(static_cast<const PackedRows&>(rows));
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t v = 1; v < limit; ++v) {
    if ((span >> v) & 1u) continue;
    rows[depth] = v;
    if (depth + 1 == n) {
      if (!visit(static_cast<const PackedRows&>(rows))) return false;
      continue;
    }
    std::uint64_t next = span;
    for (std::uint32_t w = 0; w < limit; ++w)
      if ((span >> w) & 1u) next |= std::uint64_t{1} << (w ^ v);
    if (!gl2_visit(n, depth + 1, next, rows, visit)) return false;
  }
  return true;
}

}  // namespace detail

/// Calls visit(rows) for every invertible n x n matrix in lexicographic order.
/// The visitor returns false to stop early. Returns false iff stopped.
template <class Visitor>
bool for_each_gl2(std::size_t n, Visitor&& visit, std::size_t cap = kDefaultGlCap) {
  check_gl_cap(n, cap);
  PackedRows rows(n, 0);
  return detail::gl2_visit(n, 0, std::uint64_t{1}, rows, visit);
}

/// Materialized enumeration; intended for small n.
inline std::vector<F2Matrix> gl2_enumerate(std::size_t n, std::size_t cap = kDefaultGlCap) {
  check_gl_cap(n, cap);
  std::vector<F2Matrix> out;
  out.reserve(static_cast<std::size_t>(gl2_order(std::min(n, kMaxGlDimension))));
  for_each_gl2(
      n,
      [&](const PackedRows& rows) {
        out.push_back(unpack_rows(rows));
        return true;
      },
      cap);
  return out;
}

}  // namespace conjspace
