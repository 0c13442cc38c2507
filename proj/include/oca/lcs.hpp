#pragma once
// Linear components space of an S-box: the set of nonzero masks v whose
// component v.H is affine, its canonical basis and dimension.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oca/sbox.hpp"

namespace oca {

// Subspace of F_2^length given by a canonical reduced-row-echelon basis.
// Rows are bit masks with the first coordinate as the most significant bit,
// kept in decreasing pivot order; the representation is unique per subspace.
struct LinearCode {
  int length = 0;
  std::vector<std::uint32_t> basis;

  int dimension() const noexcept { return static_cast<int>(basis.size()); }

  bool contains(std::uint32_t word) const {
    for (auto row : basis) {
      const std::uint32_t pivot = std::uint32_t{1} << (31 - std::countl_zero(row));
      if (word & pivot) word ^= row;
    }
    return word == 0;
  }

  std::string basis_text() const {
    std::string s;
    for (auto row : basis) {
      for (int i = length - 1; i >= 0; --i) s += ((row >> i) & 1u) ? '1' : '0';
      s += '\n';
    }
    return s;
  }
};

// Canonical row-reduced basis of the span of `vectors` (duplicates and the
// zero vector are fine); the result does not depend on the input order.
inline LinearCode span_basis(int length, const std::vector<std::uint32_t>& vectors) {
  if (length < 1 || length > 32) throw std::invalid_argument("code length must be 1..32");
  const std::uint64_t limit = std::uint64_t{1} << length;
  std::vector<std::uint32_t> rows;
  for (std::uint32_t v : vectors) {
    if (v >= limit) throw std::invalid_argument("vector does not fit the code length");
    for (auto row : rows) {
      const std::uint32_t pivot = std::uint32_t{1} << (31 - std::countl_zero(row));
      if (v & pivot) v ^= row;
    }
    if (v == 0) continue;
    const std::uint32_t pivot = std::uint32_t{1} << (31 - std::countl_zero(v));
    for (auto& row : rows)
      if (row & pivot) row ^= v;
    rows.push_back(v);
  }
  std::sort(rows.begin(), rows.end(), std::greater<>());
  return LinearCode{length, std::move(rows)};
}

// All nonzero masks with an affine component (constant term permitted).
inline std::vector<std::uint32_t> linear_components(const SBox& h) {
  const auto nl = component_nonlinearities(h);
  std::vector<std::uint32_t> masks;
  for (std::uint32_t v = 1; v <= nl.size(); ++v)
    if (nl[v - 1] == 0) masks.push_back(v);
  return masks;
}

namespace detail {
// The affine components plus zero form a subspace, so the member count must
// be exactly 2^rank - 1; anything else means the span leaked new vectors.
inline LinearCode components_span(int length, const std::vector<std::uint32_t>& members) {
  LinearCode code = span_basis(length, members);
  if (members.size() + 1 != (std::size_t{1} << code.dimension()))
    throw std::logic_error("linear components are not closed under XOR");
  return code;
}
}  // namespace detail

inline LinearCode lcs_code(const SBox& h) {
  return detail::components_span(h.n_bits(), linear_components(h));
}

inline int lcs_dimension(const SBox& h) { return lcs_code(h).dimension(); }

}  // namespace oca
