#pragma once

#include <cstdint>
#include <vector>

#include "lincat/cyclotomic.hpp"
#include "lincat/rational.hpp"

namespace lincat {

/// A residue in the prime field F_p. For cyclotomic reduction the prime must
/// satisfy p = 1 (mod m) so that F_p contains an m-th root of unity.
struct ModScalar {
  std::uint64_t p = 0;
  std::uint64_t residue = 0;

  bool operator==(const ModScalar&) const = default;
};

bool is_prime_u64(std::uint64_t n);

/// Smallest prime p >= start with p = 1 (mod m).
std::uint64_t next_prime_1_mod(std::uint64_t start, unsigned m);

/// Deterministic search for an element of exact multiplicative order m in F_p.
std::uint64_t find_root_of_unity(std::uint64_t p, unsigned m);

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

/// Image of a rational in F_p; throws if the denominator vanishes mod p.
std::uint64_t reduce_rational_mod(const Rat& r, std::uint64_t p);

/// Ring-homomorphism image of a cyclotomic scalar, sending zeta_m to
/// zeta_image. Validates that zeta_image has exact order m.
ModScalar reduce_mod(const CycloScalar& a, std::uint64_t p, std::uint64_t zeta_image);

/// Dense matrix over F_p (p < 2^31).
class ModMatrix {
 public:
  ModMatrix(size_t rows, size_t cols, std::uint64_t p)
      : rows_(rows), cols_(cols), p_(p), e_(rows * cols, 0) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  std::uint64_t prime() const { return p_; }

  std::uint64_t& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  std::uint64_t at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  size_t rank() const;
  std::uint64_t det() const;  // square only
  /// Columns form a basis of the right kernel.
  ModMatrix nullspace() const;
  ModMatrix mul(const ModMatrix& o) const;

 private:
  size_t rows_, cols_;
  std::uint64_t p_;
  std::vector<std::uint64_t> e_;

  // Row echelon in place; returns pivot columns, tracks det sign/value.
  static size_t echelon(ModMatrix& M, std::vector<size_t>* pivots, std::uint64_t* det);
};

}  // namespace lincat
