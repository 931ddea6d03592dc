#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lincat/rational.hpp"

namespace lincat {

/// Shared per-order data: the m-th cyclotomic polynomial and reduction
/// tables for the power basis 1, z, ..., z^{phi(m)-1}. Cached process-wide.
struct CycloBasis {
  unsigned order = 1;
  unsigned degree = 1;               // phi(m)
  std::vector<Int> min_poly;         // Phi_m, monic, length degree+1
  // reduction of z^j for j in [degree, 2*degree-2], as power-basis rows
  std::vector<std::vector<Int>> high_powers;
};

const CycloBasis& cyclo_basis(unsigned order);

unsigned euler_phi(unsigned n);

/// Coefficients of Phi_m over the integers (monic, ascending degree).
std::vector<Int> cyclotomic_polynomial(unsigned m);

/// An element of Q(zeta_m) in the power basis, always kept reduced modulo
/// the m-th cyclotomic polynomial; equality is coefficient-wise. All
/// arithmetic is exact.
class CycloScalar {
 public:
  CycloScalar() : order_(1), coeffs_(1, Rat(0)) {}
  explicit CycloScalar(unsigned order) : order_(order), coeffs_(cyclo_basis(order).degree, Rat(0)) {}
  CycloScalar(unsigned order, const Rat& value);

  static CycloScalar from_rational(const Rat& value, unsigned order = 1) {
    return CycloScalar(order, value);
  }
  /// The primitive root of unity zeta_m itself.
  static CycloScalar zeta(unsigned order);
  /// zeta_sub for sub | order, embedded as zeta_order^(order/sub).
  static CycloScalar root_of_unity(unsigned order, unsigned sub, long power = 1);
  static CycloScalar zero(unsigned order) { return CycloScalar(order); }
  static CycloScalar one(unsigned order) { return CycloScalar(order, Rat(1)); }

  unsigned order() const { return order_; }
  const std::vector<Rat>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// The rational value when the element lies in Q; throws otherwise.
  Rat rational_value() const;
  bool is_rational() const;

  CycloScalar operator-() const;
  CycloScalar operator+(const CycloScalar& o) const;
  CycloScalar operator-(const CycloScalar& o) const;
  CycloScalar operator*(const CycloScalar& o) const;
  CycloScalar operator/(const CycloScalar& o) const;
  CycloScalar inverse() const;
  CycloScalar pow(long e) const;

  CycloScalar& operator+=(const CycloScalar& o) { return *this = *this + o; }
  CycloScalar& operator-=(const CycloScalar& o) { return *this = *this - o; }
  CycloScalar& operator*=(const CycloScalar& o) { return *this = *this * o; }

  bool operator==(const CycloScalar& o) const { return order_ == o.order_ && coeffs_ == o.coeffs_; }
  bool operator!=(const CycloScalar& o) const { return !(*this == o); }
  bool operator<(const CycloScalar& o) const;  // arbitrary total order, for containers

  CycloScalar scaled(const Rat& r) const;

  /// Re-express in Q(zeta_new_order); new_order must be a multiple of order().
  CycloScalar promoted(unsigned new_order) const;

  /// Least common multiple of the coefficient denominators.
  Int denominator_lcm() const;

  /// Canonical wire form: an integer-coefficient polynomial in z over a
  /// single denominator, e.g. "(1/3)*(1 + 2*z^2)".
  std::string wire_string() const;

 private:
  unsigned order_;
  std::vector<Rat> coeffs_;  // length phi(order_), reduced

  static void check_same_order(const CycloScalar& a, const CycloScalar& b);
};

std::ostream& operator<<(std::ostream& os, const CycloScalar& s);

}  // namespace lincat
