#pragma once
// S-boxes built from a pair of cellular automata, H(x) = F(x) || G(x), and
// their vectorial measures: component functions, nonlinearity, degree,
// bijectivity and the (2,2)-multipermutation distance property.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "oca/boolfun.hpp"
#include "oca/ca.hpp"

namespace oca {

class SBox {
 public:
  SBox(int n_bits, std::vector<std::uint16_t> table)
      : n_bits_(n_bits), table_(std::move(table)) {
    if (n_bits_ < 1 || n_bits_ > 16)
      throw std::invalid_argument("S-box width must be between 1 and 16 bits");
    const std::size_t sz = std::size_t{1} << n_bits_;
    if (table_.size() != sz) throw std::invalid_argument("S-box table must have 2^n entries");
    for (auto v : table_)
      if (v >= sz) throw std::invalid_argument("S-box entry out of range");
  }

  int n_bits() const noexcept { return n_bits_; }
  std::size_t size() const noexcept { return table_.size(); }
  std::uint16_t operator()(std::size_t x) const { return table_.at(x); }
  const std::vector<std::uint16_t>& table() const noexcept { return table_; }

  // Lookup table as one line of fixed-width hex values.
  std::string hex_line() const {
    static constexpr char digits[] = "0123456789ABCDEF";
    const int w = (n_bits_ + 3) / 4;
    std::string s;
    for (std::size_t x = 0; x < table_.size(); ++x) {
      if (x) s += ' ';
      for (int nib = w - 1; nib >= 0; --nib) s += digits[(table_[x] >> (4 * nib)) & 0xF];
    }
    return s;
  }

  friend bool operator==(const SBox&, const SBox&) = default;

 private:
  int n_bits_;
  std::vector<std::uint16_t> table_;
};

namespace detail {
inline void require_ca_pair(const LocalRule& f, const LocalRule& g) {
  if (f.n_vars() != g.n_vars())
    throw std::invalid_argument("rules have different diameters");
  if (!is_bipermutive(f) || !is_bipermutive(g))
    throw std::invalid_argument("both rules must be bipermutive");
}
}  // namespace detail

// H(x) = F(x) || G(x) on n = 2(d-1) bits: the left half of the output comes
// from the CA of f, the right half from the CA of g. Orthogonality of the
// pair is not required here; without it the result may not be bijective.
inline SBox from_oca(const LocalRule& f, const LocalRule& g) {
  detail::require_ca_pair(f, g);
  const int b = f.n_vars() - 1;
  const int n = 2 * b;
  const CellularAutomaton F(f, n), G(g, n);
  std::vector<std::uint16_t> table(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < table.size(); ++x)
    table[x] = static_cast<std::uint16_t>((F.apply(x) << b) | G.apply(x));
  return SBox(n, std::move(table));
}

// Component v.H as an n-variable Boolean function; v must be nonzero.
inline LocalRule component(const SBox& h, std::uint32_t v) {
  const std::size_t sz = h.size();
  if (v == 0) throw std::invalid_argument("component mask must be nonzero");
  if (v >= sz) throw std::invalid_argument("component mask out of range");
  std::vector<std::uint8_t> t(sz);
  for (std::size_t x = 0; x < sz; ++x)
    t[x] = static_cast<std::uint8_t>(std::popcount(v & static_cast<std::uint32_t>(h(x))) & 1);
  return LocalRule(h.n_bits(), std::move(t));
}

// Nonlinearity of every component, indexed by mask value minus one.
inline std::vector<int> component_nonlinearities(const SBox& h) {
  const std::uint32_t masks = (std::uint32_t{1} << h.n_bits()) - 1;
  std::vector<int> nl(masks);
  for (std::uint32_t v = 1; v <= masks; ++v) nl[v - 1] = nonlinearity(component(h, v));
  return nl;
}

inline int sbox_nonlinearity(const SBox& h) {
  const auto nl = component_nonlinearities(h);
  return *std::min_element(nl.begin(), nl.end());
}

inline int sbox_degree(const SBox& h) {
  int d = 0;
  for (int i = 1; i <= h.n_bits(); ++i)
    d = std::max(d, degree(component(h, std::uint32_t{1} << (h.n_bits() - i))));
  return d;
}

inline bool is_bijective(const SBox& h) {
  std::vector<std::uint8_t> seen(h.size());
  for (std::size_t x = 0; x < h.size(); ++x) {
    if (seen[h(x)]) return false;
    seen[h(x)] = 1;
  }
  return true;
}

// Distance property of the pair: over b-bit symbols, any two distinct
// input/output 4-tuples (x, y, F(x||y), G(x||y)) disagree in at least 3 of
// their 4 positions.
inline bool is_multipermutation(const LocalRule& f, const LocalRule& g) {
  detail::require_ca_pair(f, g);
  const int b = f.n_vars() - 1;
  const int n = 2 * b;
  const CellularAutomaton F(f, n), G(g, n);
  const std::uint32_t inputs = std::uint32_t{1} << n;
  const std::uint32_t half = (std::uint32_t{1} << b) - 1;
  std::vector<std::uint32_t> fo(inputs), go(inputs);
  for (std::uint32_t u = 0; u < inputs; ++u) {
    fo[u] = F.apply(u);
    go[u] = G.apply(u);
  }
  for (std::uint32_t u = 0; u < inputs; ++u)
    for (std::uint32_t w = u + 1; w < inputs; ++w) {
      int agree = 0;
      if ((u >> b) == (w >> b)) ++agree;
      if ((u & half) == (w & half)) ++agree;
      if (fo[u] == fo[w]) ++agree;
      if (go[u] == go[w]) ++agree;
      if (agree > 1) return false;
    }
  return true;
}

}  // namespace oca
