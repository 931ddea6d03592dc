#include "lincat/modular.hpp"

namespace lincat {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t next_prime_1_mod(std::uint64_t start, unsigned m) {
  if (m == 0) throw domain_error("next_prime_1_mod: m must be positive");
  std::uint64_t p = start < 2 ? 2 : start;
  // align to p = 1 (mod m)
  while (true) {
    if ((m == 1 || p % m == 1) && is_prime_u64(p)) return p;
    ++p;
    if (p > (std::uint64_t(1) << 40)) throw domain_error("next_prime_1_mod: search overflow");
  }
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw domain_error("mod_inv: zero divisor");
  return mod_pow(a % p, p - 2, p);
}

namespace {

bool has_exact_order(std::uint64_t z, unsigned m, std::uint64_t p) {
  if (mod_pow(z, m, p) != 1 % p) return false;
  unsigned rest = m;
  for (unsigned ell = 2; ell <= rest; ++ell) {
    if (rest % ell != 0) continue;
    if (mod_pow(z, m / ell, p) == 1) return false;
    while (rest % ell == 0) rest /= ell;
  }
  return true;
}

}  // namespace

std::uint64_t find_root_of_unity(std::uint64_t p, unsigned m) {
  if (m == 1) return 1 % p;
  if ((p - 1) % m != 0) throw domain_error("find_root_of_unity: p != 1 (mod m)");
  for (std::uint64_t t = 2; t < p; ++t) {
    std::uint64_t z = mod_pow(t, (p - 1) / m, p);
    if (has_exact_order(z, m, p)) return z;
  }
  throw domain_error("find_root_of_unity: exhausted field");
}

std::uint64_t reduce_rational_mod(const Rat& r, std::uint64_t p) {
  Int num = r.get_num(), den = r.get_den();
  Int pz(static_cast<unsigned long>(p));
  Int nd = den % pz;
  if (nd == 0) throw domain_error("reduce_rational_mod: denominator not invertible mod p");
  Int nn = num % pz;
  if (nn < 0) nn += pz;
  std::uint64_t u = nn.get_ui();
  std::uint64_t d = nd.get_ui();
  return (u * mod_inv(d, p)) % p;
}

ModScalar reduce_mod(const CycloScalar& a, std::uint64_t p, std::uint64_t zeta_image) {
  const unsigned m = a.order();
  if (m > 1 && (p - 1) % m != 0) throw domain_error("reduce_mod: p != 1 (mod m)");
  if (!has_exact_order(zeta_image % p, m, p))
    throw domain_error("reduce_mod: zeta_image not of exact order m");
  // Horner evaluation at zeta_image
  const auto& c = a.coefficients();
  std::uint64_t acc = 0;
  for (size_t i = c.size(); i-- > 0;) {
    acc = (acc * (zeta_image % p)) % p;
    acc = (acc + reduce_rational_mod(c[i], p)) % p;
  }
  return ModScalar{p, acc};
}

size_t ModMatrix::echelon(ModMatrix& M, std::vector<size_t>* pivots, std::uint64_t* det) {
  const std::uint64_t p = M.p_;
  size_t rank = 0;
  std::uint64_t d = 1 % p;
  bool flip = false;
  for (size_t col = 0; col < M.cols_ && rank < M.rows_; ++col) {
    size_t piv = rank;
    while (piv < M.rows_ && M.at(piv, col) == 0) ++piv;
    if (piv == M.rows_) continue;
    if (piv != rank) {
      for (size_t j = col; j < M.cols_; ++j) std::swap(M.at(piv, j), M.at(rank, j));
      flip = !flip;
    }
    const std::uint64_t inv = mod_inv(M.at(rank, col), p);
    d = (d * M.at(rank, col)) % p;
    for (size_t i = rank + 1; i < M.rows_; ++i) {
      std::uint64_t f = M.at(i, col);
      if (f == 0) continue;
      std::uint64_t fi = (f * inv) % p;
      for (size_t j = col; j < M.cols_; ++j) {
        std::uint64_t sub = (fi * M.at(rank, j)) % p;
        M.at(i, j) = (M.at(i, j) + p - sub) % p;
      }
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  if (det) *det = flip ? (p - d) % p : d;
  return rank;
}

size_t ModMatrix::rank() const {
  ModMatrix tmp = *this;
  return echelon(tmp, nullptr, nullptr);
}

std::uint64_t ModMatrix::det() const {
  if (rows_ != cols_) throw domain_error("det: square matrices only");
  ModMatrix tmp = *this;
  std::uint64_t d = 0;
  size_t r = echelon(tmp, nullptr, &d);
  return r == rows_ ? d : 0;
}

ModMatrix ModMatrix::nullspace() const {
  ModMatrix tmp = *this;
  std::vector<size_t> pivots;
  size_t r = echelon(tmp, &pivots, nullptr);
  // back-substitute to reduced form
  for (size_t k = r; k-- > 0;) {
    size_t pc = pivots[k];
    std::uint64_t inv = mod_inv(tmp.at(k, pc), p_);
    for (size_t j = pc; j < cols_; ++j) tmp.at(k, j) = (tmp.at(k, j) * inv) % p_;
    for (size_t i = 0; i < k; ++i) {
      std::uint64_t f = tmp.at(i, pc);
      if (f == 0) continue;
      for (size_t j = pc; j < cols_; ++j) {
        std::uint64_t sub = (f * tmp.at(k, j)) % p_;
        tmp.at(i, j) = (tmp.at(i, j) + p_ - sub) % p_;
      }
    }
  }
  std::vector<bool> is_pivot(cols_, false);
  for (size_t pc : pivots) is_pivot[pc] = true;
  ModMatrix ker(cols_, cols_ - r, p_);
  size_t kcol = 0;
  for (size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    ker.at(free_col, kcol) = 1;
    for (size_t k = 0; k < r; ++k) {
      // pivot row k: x_{pivot} = -sum free coefficients
      std::uint64_t c = tmp.at(k, free_col);
      if (c) ker.at(pivots[k], kcol) = (p_ - c) % p_;
    }
    ++kcol;
  }
  return ker;
}

ModMatrix ModMatrix::mul(const ModMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw domain_error("ModMatrix::mul: shape/prime mismatch");
  ModMatrix r(rows_, o.cols_, p_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = at(i, k);
      if (!a) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        r.at(i, j) = (r.at(i, j) + a * o.at(k, j)) % p_;
      }
    }
  return r;
}

}  // namespace lincat
