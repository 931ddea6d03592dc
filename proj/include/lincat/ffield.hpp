#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lincat/cyclotomic.hpp"

namespace lincat {

/// The finite field F_q, q = p^k, with an explicit irreducible modulus and
/// full arithmetic tables. Elements are indices in [0, q): the index encodes
/// the coordinate vector (c_0, ..., c_{k-1}) base p, so 0 and 1 are the
/// additive and multiplicative identities.
class FieldDescriptor {
 public:
  FieldDescriptor(unsigned p, unsigned k, std::vector<unsigned> modulus);

  /// Default field of size q (q = p^k <= 128): the lexicographically
  /// smallest monic irreducible modulus of degree k over F_p.
  static std::shared_ptr<const FieldDescriptor> standard(unsigned q);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  unsigned size() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, unsigned long e) const;

  /// Fixed primitive root of F_q^x (smallest element index of order q-1).
  std::uint32_t generator() const { return generator_; }
  /// Discrete log base generator(); a must be nonzero.
  unsigned dlog(std::uint32_t a) const;

  std::vector<unsigned> coordinates(std::uint32_t a) const;  // k residues mod p
  std::string element_name(std::uint32_t a) const;

 private:
  unsigned p_, k_, q_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
  std::uint32_t generator_ = 0;
  std::vector<unsigned> dlog_;
};

using FieldPtr = std::shared_ptr<const FieldDescriptor>;

/// A multiplicative character chi: F_q^x -> Q(zeta_m)^x, indexed by its
/// exponent j against the field's fixed generator: chi(g) = zeta_{q-1}^j.
/// By convention chi(0) = 0.
class Character {
 public:
  Character(FieldPtr field, unsigned exponent, unsigned order);

  const FieldPtr& field() const { return field_; }
  unsigned exponent() const { return exponent_; }
  unsigned order() const { return order_; }
  bool is_trivial() const { return exponent_ == 0; }
  Character inverse() const;

  const CycloScalar& operator()(std::uint32_t a) const { return table_[a]; }

  bool operator==(const Character& o) const {
    return field_ == o.field_ && exponent_ == o.exponent_ && order_ == o.order_;
  }

 private:
  FieldPtr field_;
  unsigned exponent_;
  unsigned order_;
  std::vector<CycloScalar> table_;
};

/// All q-1 characters of F_q^x, in exponent order; the first is trivial.
/// Requires (q-1) | order.
std::vector<Character> characters(const FieldPtr& field, unsigned order);

/// An element of the monoid algebra k[F] of (F, *), k = Q(zeta_m).
class MonAlgElem {
 public:
  MonAlgElem(FieldPtr field, unsigned order);
  static MonAlgElem basis(FieldPtr field, unsigned order, std::uint32_t a);

  const FieldPtr& field() const { return field_; }
  unsigned order() const { return order_; }
  const CycloScalar& coeff(std::uint32_t a) const { return coeffs_[a]; }
  void set_coeff(std::uint32_t a, CycloScalar v);

  MonAlgElem operator+(const MonAlgElem& o) const;
  MonAlgElem operator-(const MonAlgElem& o) const;
  /// Bilinear extension of [a]*[b] = [ab].
  MonAlgElem operator*(const MonAlgElem& o) const;
  MonAlgElem scaled(const CycloScalar& c) const;
  bool operator==(const MonAlgElem& o) const;
  bool is_zero() const;

 private:
  FieldPtr field_;
  unsigned order_;
  std::vector<CycloScalar> coeffs_;  // dense, length q
};

/// e_0 = [0].
MonAlgElem idempotent_zero(const FieldPtr& field, unsigned order);

/// e_chi = -delta_chi [0] + 1/(q-1) sum_{a != 0} chi^{-1}(a) [a].
MonAlgElem idempotent_chi(const Character& chi);

}  // namespace lincat
