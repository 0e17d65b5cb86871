#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylkit/bigint.hpp"

namespace weylkit {

/// Dense integer polynomial in q; coeffs[k] is the coefficient of q^k.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs);
  static Poly constant(BigInt c) { return Poly({std::move(c)}); }
  static Poly monomial(unsigned k, BigInt c = 1);
  static Poly cyclotomic(unsigned d);

  int degree() const { return static_cast<int>(_c.size()) - 1; } // -1 for zero
  bool is_zero() const { return _c.empty(); }
  BigInt const &coeff(std::size_t k) const;
  std::vector<BigInt> const &coeffs() const { return _c; }
  BigInt lead() const { return _c.empty() ? BigInt(0) : _c.back(); }

  Poly operator+(Poly const &o) const;
  Poly operator-(Poly const &o) const;
  Poly operator*(Poly const &o) const;
  Poly operator-() const;
  bool operator==(Poly const &o) const { return _c == o._c; }

  // Division by a monic polynomial; returns false when the remainder is nonzero.
  bool divide_exact(Poly const &monic, Poly &quotient) const;
  BigInt eval(BigInt const &q) const;
  std::string to_string() const;

private:
  void trim();
  std::vector<BigInt> _c;
};

/**
 * Product sign * q^q_power * prod Phi_d(q)^mult over cyclotomic
 * polynomials Phi_d.  The printed form puts the q power first and the
 * cyclotomic factors by decreasing d, e.g. "q^7*(q^2+q+1)*(q+1)".
 */
struct FactoredPolynomial {
  int sign = 1;
  unsigned q_power = 0;
  std::map<unsigned, unsigned> cyclotomic; // d -> multiplicity

  Poly expand() const;
  BigInt eval(BigInt const &q) const { return expand().eval(q); }
  std::string to_string() const;
  bool operator==(FactoredPolynomial const &) const = default;

  /**
   * Factors p by trial division with Phi_d for every d whose degree does not
   * exceed deg p.  The cofactor must be +-q^k; anything else throws
   * std::domain_error.
   */
  static FactoredPolynomial factor(Poly const &p);
  static FactoredPolynomial parse(std::string const &text);
};

/// Euler's totient for small arguments.
unsigned totient(unsigned n);

} // namespace weylkit
