#pragma once

#include <optional>
#include <vector>

#include "lincat/cyclotomic.hpp"

namespace lincat {

/// Dense matrix over Q(zeta_m), all entries of one order. Rank, kernel and
/// solving use fraction-free (Bareiss-style) elimination after clearing row
/// denominators; rank() additionally tries a modular full-rank certificate
/// first, which settles the large semisimple cases quickly.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0), order_(1) {}
  ExactMatrix(size_t rows, size_t cols, unsigned order);
  static ExactMatrix identity(size_t n, unsigned order);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  unsigned order() const { return order_; }

  const CycloScalar& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
  void set(size_t i, size_t j, CycloScalar v);

  ExactMatrix transpose() const;
  ExactMatrix mul(const ExactMatrix& o) const;
  ExactMatrix add(const ExactMatrix& o) const;
  ExactMatrix sub(const ExactMatrix& o) const;
  ExactMatrix scaled(const CycloScalar& c) const;
  bool operator==(const ExactMatrix& o) const;

  size_t rank() const;
  size_t nullity() const { return cols_ - rank(); }
  /// Columns form an exact basis of the right kernel.
  ExactMatrix nullspace() const;
  /// Solves A x = rhs column-by-column; nullopt if any column is
  /// inconsistent. Requires full column rank for a well-defined answer.
  std::optional<ExactMatrix> solve(const ExactMatrix& rhs) const;
  CycloScalar det() const;
  CycloScalar trace() const;

  Int max_denominator() const;

  /// Exact rank without the modular shortcut (used by tests as the
  /// reference path).
  size_t rank_exact() const;

 private:
  size_t rows_, cols_;
  unsigned order_;
  std::vector<CycloScalar> e_;

  friend struct Echelon;
};

}  // namespace lincat
