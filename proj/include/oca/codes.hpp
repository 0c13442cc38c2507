#pragma once
// Recognition of polynomial and cyclic codes. A length-n codeword
// (c1,...,cn) is read as the polynomial c1 + c2*X + ... + cn*X^(n-1), i.e.
// the leftmost (most significant) coordinate is the coefficient of X^0.
// A code of dimension k is a polynomial code iff the gcd of its basis
// polynomials has degree exactly n-k; the code is then the span of the k
// shifts X^i*g, and it is cyclic iff g additionally divides X^n + 1.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "oca/lcs.hpp"
#include "oca/polynomial.hpp"

namespace oca {

struct CodeClassification {
  bool is_polynomial = false;
  std::optional<BinaryPolynomial> generator;  // present iff is_polynomial
  bool is_cyclic = false;                     // implies is_polynomial
};

inline BinaryPolynomial codeword_polynomial(std::uint32_t word, int n) {
  if (n < 1 || n > 32) throw std::invalid_argument("codeword length must be 1..32");
  std::uint64_t p = 0;
  for (int j = 0; j < n; ++j)
    if ((word >> (n - 1 - j)) & 1u) p |= std::uint64_t{1} << j;
  return BinaryPolynomial(p);
}

inline std::uint32_t polynomial_codeword(const BinaryPolynomial& p, int n) {
  if (n < 1 || n > 32) throw std::invalid_argument("codeword length must be 1..32");
  if (!p.is_zero() && p.degree() >= n)
    throw std::invalid_argument("polynomial does not fit the codeword length");
  std::uint32_t w = 0;
  for (int j = 0; j < n; ++j)
    if (p.coeff(j)) w |= std::uint32_t{1} << (n - 1 - j);
  return w;
}

// Rows of the (n-t) x n generator matrix of g, row i being X^i * g padded to
// length n; requires 0 < deg g = t < n.
inline std::vector<std::uint32_t> generator_matrix(const BinaryPolynomial& g, int n) {
  if (g.is_zero()) throw std::invalid_argument("generator polynomial must be nonzero");
  const int t = g.degree();
  if (t <= 0 || t >= n)
    throw std::invalid_argument("generator degree must satisfy 0 < deg g < n");
  std::vector<std::uint32_t> rows(n - t);
  for (int i = 0; i < n - t; ++i)
    rows[i] = polynomial_codeword(BinaryPolynomial(g.coeff_mask() << i), n);
  return rows;
}

inline CodeClassification classify_code(const LinearCode& code) {
  CodeClassification out;
  const int n = code.length;
  const int k = code.dimension();
  if (k == 0) return out;  // the empty code carries no generator

  BinaryPolynomial g;
  for (auto row : code.basis) {
    const BinaryPolynomial p = codeword_polynomial(row, n);
    g = g.is_zero() ? p : poly_gcd(g, p);
  }
  if (g.degree() != n - k) return out;

  // The degree equality already forces span{X^i g} = code; verify anyway.
  if (k < n)
    for (auto row : generator_matrix(g, n))
      if (!code.contains(row))
        throw std::logic_error("generator shifts escape the code span");

  out.is_polynomial = true;
  out.generator = g;
  out.is_cyclic = poly_divides(g, BinaryPolynomial((std::uint64_t{1} << n) | 1u));
  return out;
}

}  // namespace oca
