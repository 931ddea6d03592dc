#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lincat {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown on violated operation preconditions (mismatched orders, division
/// by zero, bad field data, ...).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an enumeration would exceed the configured cap.
class cap_exceeded : public std::runtime_error {
 public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Floor of the integer square root.
inline Int int_sqrt(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& a) {
  return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline unsigned long to_ulong(const Int& a, const char* what) {
  if (a < 0 || !a.fits_ulong_p()) throw domain_error(std::string(what) + ": out of range");
  return a.get_ui();
}

}  // namespace lincat
