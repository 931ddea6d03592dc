#include "lincat/exact_matrix.hpp"

#include <algorithm>

#include "lincat/modular.hpp"

namespace lincat {

ExactMatrix::ExactMatrix(size_t rows, size_t cols, unsigned order)
    : rows_(rows), cols_(cols), order_(order), e_(rows * cols, CycloScalar(order)) {}

ExactMatrix ExactMatrix::identity(size_t n, unsigned order) {
  ExactMatrix m(n, n, order);
  for (size_t i = 0; i < n; ++i) m.set(i, i, CycloScalar::one(order));
  return m;
}

void ExactMatrix::set(size_t i, size_t j, CycloScalar v) {
  if (v.order() != order_) throw domain_error("ExactMatrix::set: order mismatch");
  e_[i * cols_ + j] = std::move(v);
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_, order_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.e_[j * rows_ + i] = e_[i * cols_ + j];
  return t;
}

ExactMatrix ExactMatrix::mul(const ExactMatrix& o) const {
  if (cols_ != o.rows_ || order_ != o.order_) throw domain_error("ExactMatrix::mul: shape mismatch");
  ExactMatrix r(rows_, o.cols_, order_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const CycloScalar& a = e_[i * cols_ + k];
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const CycloScalar& b = o.e_[k * o.cols_ + j];
        if (b.is_zero()) continue;
        r.e_[i * o.cols_ + j] += a * b;
      }
    }
  return r;
}

ExactMatrix ExactMatrix::add(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("ExactMatrix::add: shape mismatch");
  ExactMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

ExactMatrix ExactMatrix::sub(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("ExactMatrix::sub: shape mismatch");
  ExactMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

ExactMatrix ExactMatrix::scaled(const CycloScalar& c) const {
  ExactMatrix r = *this;
  for (auto& x : r.e_) x *= c;
  return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && order_ == o.order_ && e_ == o.e_;
}

CycloScalar ExactMatrix::trace() const {
  if (rows_ != cols_) throw domain_error("trace: square matrices only");
  CycloScalar t(order_);
  for (size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Int ExactMatrix::max_denominator() const {
  Int mx(1);
  for (const auto& x : e_) {
    Int d = x.denominator_lcm();
    if (d > mx) mx = d;
  }
  return mx;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

struct Echelon {
  // Working copy, row-denominators cleared, then Bareiss one-step division.
  size_t rows, cols;
  unsigned order;
  std::vector<CycloScalar> w;
  std::vector<size_t> pivot_cols;
  size_t rank = 0;
  bool sign_flip = false;
  Rat row_scale_product = 1;  // product of denominator-clearing factors

  CycloScalar& at(size_t i, size_t j) { return w[i * cols + j]; }

  explicit Echelon(const ExactMatrix& m, size_t elim_cols)
      : rows(m.rows()), cols(m.cols()), order(m.order()), w(m.e_) {
    for (size_t i = 0; i < rows; ++i) {
      Int l(1);
      for (size_t j = 0; j < cols; ++j) l = int_lcm(l, at(i, j).denominator_lcm());
      if (l != 1) {
        Rat f(l);
        for (size_t j = 0; j < cols; ++j) at(i, j) = at(i, j).scaled(f);
        row_scale_product *= f;
      }
    }
    CycloScalar prev = CycloScalar::one(order);
    for (size_t col = 0; col < elim_cols && rank < rows; ++col) {
      size_t piv = rank;
      while (piv < rows && at(piv, col).is_zero()) ++piv;
      if (piv == rows) continue;
      if (piv != rank) {
        for (size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
        sign_flip = !sign_flip;
      }
      const CycloScalar& pv = at(rank, col);
      for (size_t i = rank + 1; i < rows; ++i) {
        if (at(i, col).is_zero()) {
          // still divide the Bareiss way to keep the invariant shape
          for (size_t j = col + 1; j < cols; ++j) {
            if (at(i, j).is_zero()) continue;
            at(i, j) = (pv * at(i, j)) / prev;
          }
          continue;
        }
        CycloScalar f = at(i, col);
        for (size_t j = col + 1; j < cols; ++j) {
          at(i, j) = (pv * at(i, j) - f * at(rank, j)) / prev;
        }
        at(i, col) = CycloScalar::zero(order);
      }
      prev = pv;
      pivot_cols.push_back(col);
      ++rank;
    }
  }

  // Reduced form over the pivot columns (back-substitution with exact field
  // division); call once after construction when kernels/solutions are needed.
  void reduce() {
    for (size_t k = rank; k-- > 0;) {
      size_t pc = pivot_cols[k];
      CycloScalar inv = at(k, pc).inverse();
      for (size_t j = pc; j < cols; ++j) {
        if (!at(k, j).is_zero()) at(k, j) = at(k, j) * inv;
      }
      for (size_t i = 0; i < k; ++i) {
        CycloScalar f = at(i, pc);
        if (f.is_zero()) continue;
        for (size_t j = pc; j < cols; ++j) {
          if (!at(k, j).is_zero()) at(i, j) -= f * at(k, j);
        }
      }
    }
  }
};

size_t ExactMatrix::rank_exact() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  Echelon ech(*this, cols_);
  return ech.rank;
}

size_t ExactMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  const size_t bound = std::min(rows_, cols_);
  if (bound >= 48) {
    // Modular certificate: rank over F_p never exceeds the exact rank, so a
    // full-rank modular image settles the question without big arithmetic.
    Int den_lcm(1);
    for (const auto& x : e_) den_lcm = int_lcm(den_lcm, x.denominator_lcm());
    std::uint64_t p = next_prime_1_mod(1u << 20, order_);
    while (mpz_divisible_ui_p(den_lcm.get_mpz_t(), static_cast<unsigned long>(p)))
      p = next_prime_1_mod(p + 1, order_);
    std::uint64_t zeta = find_root_of_unity(p, order_);
    ModMatrix mm(rows_, cols_, p);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) mm.at(i, j) = reduce_mod(at(i, j), p, zeta).residue;
    size_t r = mm.rank();
    if (r == bound) return r;
  }
  return rank_exact();
}

ExactMatrix ExactMatrix::nullspace() const {
  if (cols_ == 0) return ExactMatrix(0, 0, order_);
  if (rows_ == 0) return identity(cols_, order_);
  Echelon ech(*this, cols_);
  ech.reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t pc : ech.pivot_cols) is_pivot[pc] = true;
  ExactMatrix ker(cols_, cols_ - ech.rank, order_);
  size_t kcol = 0;
  for (size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    ker.set(free_col, kcol, CycloScalar::one(order_));
    for (size_t k = 0; k < ech.rank; ++k) {
      const CycloScalar& c = ech.at(k, free_col);
      if (!c.is_zero()) ker.set(ech.pivot_cols[k], kcol, -c);
    }
    ++kcol;
  }
  return ker;
}

std::optional<ExactMatrix> ExactMatrix::solve(const ExactMatrix& rhs) const {
  if (rhs.rows_ != rows_ || rhs.order_ != order_) throw domain_error("solve: shape mismatch");
  ExactMatrix aug(rows_, cols_ + rhs.cols_, order_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
    for (size_t j = 0; j < rhs.cols_; ++j) aug.set(i, cols_ + j, rhs.at(i, j));
  }
  Echelon ech(aug, cols_);  // pivots only in the A-part
  ech.reduce();
  // consistency: rows past the rank must have zero RHS residue
  for (size_t i = ech.rank; i < rows_; ++i)
    for (size_t j = 0; j < rhs.cols_; ++j)
      if (!ech.at(i, cols_ + j).is_zero()) return std::nullopt;
  ExactMatrix x(cols_, rhs.cols_, order_);
  for (size_t k = 0; k < ech.rank; ++k)
    for (size_t j = 0; j < rhs.cols_; ++j) x.set(ech.pivot_cols[k], j, ech.at(k, cols_ + j));
  return x;
}

CycloScalar ExactMatrix::det() const {
  if (rows_ != cols_) throw domain_error("det: square matrices only");
  if (rows_ == 0) return CycloScalar::one(order_);
  Echelon ech(*this, cols_);
  if (ech.rank < rows_) return CycloScalar::zero(order_);
  // Bareiss: the last pivot is the determinant of the scaled matrix.
  CycloScalar d = ech.at(rows_ - 1, ech.pivot_cols[rows_ - 1]);
  if (ech.sign_flip) d = -d;
  return d.scaled(Rat(1) / ech.row_scale_product);
}

}  // namespace lincat
