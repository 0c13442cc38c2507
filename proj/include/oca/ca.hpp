#pragma once
// No-boundary cellular automata, the Latin squares induced by bipermutive
// rules, and the two orthogonality tests (cellwise superposition and, for
// linear rules, coprimality of the associated polynomials).

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "oca/boolfun.hpp"
#include "oca/polynomial.hpp"

namespace oca {

// One-shot vectorial map: coordinate i of the output is the rule applied to
// the window (x_i, ..., x_{i+b}); the output is b = d-1 cells shorter than
// the input. Inputs are packed with x1 as the most significant bit.
class CellularAutomaton {
 public:
  CellularAutomaton(LocalRule rule, int input_len)
      : rule_(std::move(rule)), input_len_(input_len) {
    const int d = rule_.n_vars();
    if (d < 1) throw std::invalid_argument("CA rule needs at least one variable");
    if (input_len_ < d)
      throw std::invalid_argument("CA input must be at least as long as the rule diameter");
    if (input_len_ > 25) throw std::invalid_argument("CA input length limited to 25 cells");
  }

  const LocalRule& rule() const noexcept { return rule_; }
  int input_len() const noexcept { return input_len_; }
  int output_len() const noexcept { return input_len_ - (rule_.n_vars() - 1); }

  std::uint32_t apply(std::uint32_t input) const {
    const int n = input_len_;
    const int d = rule_.n_vars();
    if (input >> n)
      throw std::invalid_argument("CA input does not fit the configured length");
    const std::uint32_t window_mask = (d == 32) ? ~0u : ((std::uint32_t{1} << d) - 1);
    std::uint32_t out = 0;
    for (int c = 0; c <= n - d; ++c)
      out = (out << 1) | rule_.bit((input >> (n - d - c)) & window_mask);
    return out;
  }

  std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& cells) const {
    if (static_cast<int>(cells.size()) != input_len_)
      throw std::invalid_argument("CA input has length " + std::to_string(cells.size()) +
                                  ", expected " + std::to_string(input_len_));
    std::uint32_t x = 0;
    for (auto c : cells) {
      if (c > 1) throw std::invalid_argument("CA input cells must be 0 or 1");
      x = (x << 1) | c;
    }
    std::uint32_t out = apply(x);
    std::vector<std::uint8_t> res(output_len());
    for (int i = 0; i < output_len(); ++i)
      res[i] = static_cast<std::uint8_t>((out >> (output_len() - 1 - i)) & 1u);
    return res;
  }

 private:
  LocalRule rule_;
  int input_len_;
};

struct LatinSquare {
  int order = 0;                     // N = 2^b
  std::vector<std::uint16_t> cells;  // N*N entries, row-major, values in 0..N-1

  std::uint16_t at(int row, int col) const {
    return cells.at(static_cast<std::size_t>(row) * order + col);
  }
};

// Square of a bipermutive rule of diameter d: rows are indexed by the left
// b input cells, columns by the right b cells, entries are the CA output.
inline LatinSquare latin_square(const LocalRule& rule) {
  if (!is_bipermutive(rule)) throw std::invalid_argument("rule is not bipermutive");
  const int b = rule.n_vars() - 1;
  if (b > 12) throw std::invalid_argument("Latin square order limited to 2^12");
  const int order = 1 << b;
  const CellularAutomaton ca(rule, 2 * b);
  LatinSquare sq{order, std::vector<std::uint16_t>(static_cast<std::size_t>(order) * order)};
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      sq.cells[static_cast<std::size_t>(i) * order + j] =
          static_cast<std::uint16_t>(ca.apply((static_cast<std::uint32_t>(i) << b) | j));
  return sq;
}

inline bool is_latin(const LatinSquare& sq) {
  const int n = sq.order;
  if (n <= 0 || sq.cells.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("malformed square");
  std::vector<std::uint8_t> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      const auto v = sq.at(i, j);
      if (v >= n || seen[v]) return false;
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      const auto v = sq.at(j, i);
      if (v >= n || seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

// Superposition test: the N^2 cellwise pairs must be pairwise distinct.
inline bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  if (a.order != b.order) throw std::invalid_argument("squares have different orders");
  const std::size_t cells = a.cells.size();
  std::vector<std::uint8_t> seen(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    const std::size_t key = static_cast<std::size_t>(a.cells[i]) * a.order + b.cells[i];
    if (seen[key]) return false;
    seen[key] = 1;
  }
  return true;
}

inline bool is_oca_pair(const LocalRule& f, const LocalRule& g) {
  if (f.n_vars() != g.n_vars())
    throw std::invalid_argument("rules have different diameters");
  return are_orthogonal(latin_square(f), latin_square(g));
}

// For linear bipermutive rules orthogonality is equivalent to coprimality of
// the associated polynomials; agrees with is_oca_pair on its whole domain.
inline bool linear_orthogonality_by_coprimality(const LocalRule& f, const LocalRule& g) {
  if (f.n_vars() != g.n_vars())
    throw std::invalid_argument("rules have different diameters");
  const BinaryPolynomial pf = rule_polynomial(f);
  const BinaryPolynomial pg = rule_polynomial(g);
  return poly_gcd(pf, pg) == BinaryPolynomial(1);
}

inline std::string latin_to_text(const LatinSquare& sq) {
  std::string s;
  for (int i = 0; i < sq.order; ++i) {
    for (int j = 0; j < sq.order; ++j) {
      if (j) s += ' ';
      s += std::to_string(sq.at(i, j));
    }
    s += '\n';
  }
  return s;
}

inline std::string latin_to_csv(const LatinSquare& sq) {
  std::string s;
  for (int i = 0; i < sq.order; ++i) {
    for (int j = 0; j < sq.order; ++j) {
      if (j) s += ',';
      s += std::to_string(sq.at(i, j));
    }
    s += '\n';
  }
  return s;
}

}  // namespace oca
