#pragma once
// Single-output Boolean functions: truth tables, Walsh spectra, algebraic
// normal form, nonlinearity, balancedness, bipermutivity and the polynomial
// associated with a linear bipermutive rule.
//
// Index convention, used by every module in this library: the input
// (x1,...,xn) maps to the truth-table index with x1 as the most significant
// bit, so index 0 is the all-zero input and index 2^n-1 the all-one input.
// Rule numbers put table entry k at bit k (least significant first), which
// matches Wolfram's numbering for elementary rules.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oca/polynomial.hpp"

namespace oca {

class LocalRule {
 public:
  LocalRule(int n_vars, std::vector<std::uint8_t> table)
      : n_vars_(n_vars), table_(std::move(table)) {
    if (n_vars_ < 0 || n_vars_ > 25)
      throw std::invalid_argument("variable count must be between 0 and 25");
    if (table_.size() != (std::size_t{1} << n_vars_))
      throw std::invalid_argument("truth table must have exactly 2^n entries");
    for (auto v : table_)
      if (v > 1) throw std::invalid_argument("truth table entries must be 0 or 1");
  }

  // Decodes a Wolfram-style rule number: table bit k = bit k of `number`.
  static LocalRule from_rule_number(std::uint64_t number, int n_vars) {
    if (n_vars < 1) throw std::invalid_argument("rule must have at least one variable");
    if (n_vars > 6)
      throw std::invalid_argument("rule numbers cover at most 6 variables (64 table bits)");
    const std::size_t sz = std::size_t{1} << n_vars;
    if (sz < 64 && number >= (std::uint64_t{1} << sz))
      throw std::invalid_argument("rule number " + std::to_string(number) + " out of range for " +
                                  std::to_string(n_vars) + " variables (must be < 2^" +
                                  std::to_string(sz) + ")");
    std::vector<std::uint8_t> t(sz);
    for (std::size_t k = 0; k < sz; ++k) t[k] = static_cast<std::uint8_t>((number >> k) & 1u);
    return LocalRule(n_vars, std::move(t));
  }

  int n_vars() const noexcept { return n_vars_; }
  std::size_t table_size() const noexcept { return table_.size(); }
  const std::vector<std::uint8_t>& table() const noexcept { return table_; }
  std::uint8_t bit(std::size_t input) const { return table_.at(input); }

  std::uint64_t rule_number() const {
    if (n_vars_ > 6) throw std::domain_error("rule number exceeds 64 bits");
    std::uint64_t n = 0;
    for (std::size_t k = 0; k < table_.size(); ++k) n |= std::uint64_t{table_[k]} << k;
    return n;
  }

  friend bool operator==(const LocalRule&, const LocalRule&) = default;

 private:
  int n_vars_;
  std::vector<std::uint8_t> table_;
};

struct WalshSpectrum {
  int n_vars = 0;
  std::vector<std::int32_t> values;  // entry a = W_f(a), same index convention

  std::int32_t max_abs() const {
    std::int32_t m = 0;
    for (auto v : values) {
      const std::int32_t a = v < 0 ? -v : v;
      if (a > m) m = a;
    }
    return m;
  }
};

// Fast in-place butterfly; agrees with the direct correlation sum
// W_f(a) = sum_x (-1)^(f(x) xor a.x) entry by entry.
inline WalshSpectrum walsh_transform(const LocalRule& f) {
  const std::size_t sz = f.table_size();
  WalshSpectrum w{f.n_vars(), std::vector<std::int32_t>(sz)};
  for (std::size_t x = 0; x < sz; ++x) w.values[x] = f.bit(x) ? -1 : 1;
  for (std::size_t step = 1; step < sz; step <<= 1)
    for (std::size_t i = 0; i < sz; i += step << 1)
      for (std::size_t j = i; j < i + step; ++j) {
        const std::int32_t a = w.values[j];
        const std::int32_t b = w.values[j + step];
        w.values[j] = a + b;
        w.values[j + step] = a - b;
      }
  return w;
}

inline int nonlinearity(const LocalRule& f) {
  if (f.n_vars() == 0) return 0;
  return (1 << (f.n_vars() - 1)) - walsh_transform(f).max_abs() / 2;
}

struct AnfForm {
  int n_vars = 0;
  std::vector<std::uint8_t> coeffs;  // entry u = coefficient of the monomial u

  // Renders monomials by ascending degree, ties broken by variable order,
  // e.g. "x1+x3+x2*x3"; constants render as "0" or "1".
  std::string to_string() const {
    std::vector<std::vector<int>> monos;
    for (std::size_t u = 0; u < coeffs.size(); ++u) {
      if (!coeffs[u]) continue;
      std::vector<int> vars;
      for (int i = 1; i <= n_vars; ++i)
        if ((u >> (n_vars - i)) & 1u) vars.push_back(i);
      monos.push_back(std::move(vars));
    }
    if (monos.empty()) return "0";
    std::sort(monos.begin(), monos.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    std::string s;
    for (const auto& m : monos) {
      if (!s.empty()) s += '+';
      if (m.empty()) {
        s += '1';
        continue;
      }
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += '*';
        s += 'x' + std::to_string(m[i]);
      }
    }
    return s;
  }
};

namespace detail {
// Binary Moebius transform, an involution.
inline void moebius_inplace(std::vector<std::uint8_t>& t) {
  const std::size_t sz = t.size();
  for (std::size_t step = 1; step < sz; step <<= 1)
    for (std::size_t j = 0; j < sz; ++j)
      if (j & step) t[j] ^= t[j ^ step];
}
}  // namespace detail

inline AnfForm anf(const LocalRule& f) {
  AnfForm a{f.n_vars(), f.table()};
  detail::moebius_inplace(a.coeffs);
  return a;
}

inline LocalRule anf_to_rule(const AnfForm& a) {
  std::vector<std::uint8_t> t = a.coeffs;
  detail::moebius_inplace(t);
  return LocalRule(a.n_vars, std::move(t));
}

inline int degree(const LocalRule& f) {
  const AnfForm a = anf(f);
  int d = 0;
  for (std::size_t u = 0; u < a.coeffs.size(); ++u)
    if (a.coeffs[u]) {
      const int w = std::popcount(u);
      if (w > d) d = w;
    }
  return d;
}

inline bool is_balanced(const LocalRule& f) {
  std::size_t ones = 0;
  for (auto v : f.table()) ones += v;
  return 2 * ones == f.table_size();
}

inline bool is_affine(const LocalRule& f) { return degree(f) <= 1; }

inline bool is_linear(const LocalRule& f) {
  const AnfForm a = anf(f);
  if (a.coeffs[0]) return false;
  for (std::size_t u = 1; u < a.coeffs.size(); ++u)
    if (a.coeffs[u] && std::popcount(u) > 1) return false;
  return true;
}

// If f(x1,...,xd) = x1 xor g(x2,...,x_{d-1}) xor xd, returns the generating
// function g (a 0-variable constant for d = 2); otherwise nothing. The check
// is constructive: flipping x1 or xd must always flip the output.
inline std::optional<LocalRule> bipermutive_generator(const LocalRule& f) {
  const int d = f.n_vars();
  if (d < 2) throw std::invalid_argument("bipermutivity needs at least 2 variables");
  const std::size_t sz = f.table_size();
  const std::size_t msb = sz >> 1;
  for (std::size_t x = 0; x < sz; ++x)
    if (f.bit(x) == f.bit(x ^ msb) || f.bit(x) == f.bit(x ^ 1u)) return std::nullopt;
  const int mid = d - 2;
  std::vector<std::uint8_t> g(std::size_t{1} << mid);
  for (std::size_t m = 0; m < g.size(); ++m) g[m] = f.bit(m << 1);
  return LocalRule(mid, std::move(g));
}

inline bool is_bipermutive(const LocalRule& f) { return bipermutive_generator(f).has_value(); }

// For a linear bipermutive rule with coefficients (1, a2, ..., ab, 1) returns
// the associated polynomial 1 + a2*X + ... + ab*X^(b-1) + X^b, b = d-1.
inline BinaryPolynomial rule_polynomial(const LocalRule& f) {
  const int d = f.n_vars();
  if (!is_bipermutive(f)) throw std::domain_error("rule is not bipermutive");
  if (!is_linear(f)) throw std::domain_error("rule is not linear; no associated polynomial");
  const AnfForm a = anf(f);
  std::uint64_t p = 0;
  for (int j = 0; j <= d - 1; ++j)
    if (a.coeffs[std::size_t{1} << (d - 1 - j)]) p |= std::uint64_t{1} << j;
  return BinaryPolynomial(p);
}

}  // namespace oca
