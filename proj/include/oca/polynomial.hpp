#pragma once
// Polynomials over GF(2), packed into a 64-bit coefficient mask:
// bit i holds the coefficient of X^i. Nonzero polynomials are monic by
// construction; the zero polynomial carries no degree.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace oca {

class BinaryPolynomial {
 public:
  constexpr BinaryPolynomial() noexcept = default;
  constexpr explicit BinaryPolynomial(std::uint64_t coeffs) noexcept : coeffs_(coeffs) {}

  constexpr bool is_zero() const noexcept { return coeffs_ == 0; }
  constexpr std::uint64_t coeff_mask() const noexcept { return coeffs_; }
  constexpr int coeff(int i) const noexcept {
    return (i < 0 || i > 63) ? 0 : static_cast<int>((coeffs_ >> i) & 1u);
  }

  int degree() const {
    if (coeffs_ == 0) throw std::domain_error("the zero polynomial has no degree");
    return 63 - std::countl_zero(coeffs_);
  }

  // Renders "1+X+X^4"; the zero polynomial renders as "0".
  std::string to_string() const {
    if (coeffs_ == 0) return "0";
    std::string s;
    for (int i = 0; i <= degree(); ++i) {
      if (!coeff(i)) continue;
      if (!s.empty()) s += '+';
      if (i == 0)
        s += '1';
      else if (i == 1)
        s += 'X';
      else
        s += "X^" + std::to_string(i);
    }
    return s;
  }

  friend constexpr BinaryPolynomial operator+(BinaryPolynomial a, BinaryPolynomial b) noexcept {
    return BinaryPolynomial(a.coeffs_ ^ b.coeffs_);
  }

  friend BinaryPolynomial operator*(BinaryPolynomial a, BinaryPolynomial b) {
    if (a.is_zero() || b.is_zero()) return BinaryPolynomial{};
    if (a.degree() + b.degree() > 63)
      throw std::overflow_error("polynomial product needs more than 64 coefficients");
    std::uint64_t r = 0;
    for (std::uint64_t m = a.coeffs_; m != 0; m &= m - 1)
      r ^= b.coeffs_ << std::countr_zero(m);
    return BinaryPolynomial(r);
  }

  friend constexpr bool operator==(BinaryPolynomial a, BinaryPolynomial b) noexcept = default;

 private:
  std::uint64_t coeffs_ = 0;
};

inline BinaryPolynomial poly_mod(BinaryPolynomial a, BinaryPolynomial m) {
  if (m.is_zero()) throw std::domain_error("polynomial division by zero");
  const int dm = m.degree();
  std::uint64_t r = a.coeff_mask();
  while (r != 0) {
    const int dr = 63 - std::countl_zero(r);
    if (dr < dm) break;
    r ^= m.coeff_mask() << (dr - dm);
  }
  return BinaryPolynomial(r);
}

inline BinaryPolynomial poly_gcd(BinaryPolynomial a, BinaryPolynomial b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    BinaryPolynomial r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

// True iff p divides q (q mod p = 0); p must be nonzero.
inline bool poly_divides(BinaryPolynomial p, BinaryPolynomial q) {
  if (p.is_zero()) throw std::domain_error("divisibility by the zero polynomial is undefined");
  return poly_mod(q, p).is_zero();
}

}  // namespace oca
