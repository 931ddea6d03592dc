#include "lincat/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace lincat {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of polynomials with integer coefficients; the divisor must
// be monic and the division must leave no remainder.
std::vector<Int> exact_poly_div(std::vector<Int> num, const std::vector<Int>& den) {
  const size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw domain_error("exact_poly_div: degree underflow");
  std::vector<Int> quot(num.size() - dd, Int(0));
  for (size_t i = num.size(); i-- > dd;) {
    Int c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw domain_error("exact_poly_div: nonzero remainder");
  return quot;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw domain_error("cyclotomic order must be positive");
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  std::vector<Int> num(m + 1, Int(0));
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = exact_poly_div(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

const CycloBasis& cyclo_basis(unsigned order) {
  static std::map<unsigned, CycloBasis> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  CycloBasis b;
  b.order = order;
  b.min_poly = cyclotomic_polynomial(order);
  b.degree = static_cast<unsigned>(b.min_poly.size() - 1);
  // z^j for degree <= j <= 2*degree-2, reduced: z^degree = -lower part of
  // Phi, then each next power shifts and reduces once more.
  std::vector<Int> cur(b.degree, Int(0));
  for (unsigned i = 0; i < b.degree; ++i) cur[i] = -b.min_poly[i];
  if (b.degree >= 1) {
    for (unsigned j = b.degree; j + 1 <= 2 * b.degree - 1; ++j) {
      b.high_powers.push_back(cur);
      Int top = cur[b.degree - 1];
      for (unsigned i = b.degree; i-- > 1;) cur[i] = cur[i - 1] - top * b.min_poly[i];
      cur[0] = -top * b.min_poly[0];
    }
  }
  return cache.emplace(order, std::move(b)).first->second;
}

CycloScalar::CycloScalar(unsigned order, const Rat& value)
    : order_(order), coeffs_(cyclo_basis(order).degree, Rat(0)) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

CycloScalar CycloScalar::zeta(unsigned order) {
  CycloScalar s(order);
  const unsigned deg = cyclo_basis(order).degree;
  if (deg == 1) {
    // z reduces to a rational: order 1 -> 1, order 2 -> -1
    s.coeffs_[0] = (order == 1) ? 1 : -1;
  } else {
    s.coeffs_[1] = 1;
  }
  return s;
}

CycloScalar CycloScalar::root_of_unity(unsigned order, unsigned sub, long power) {
  if (sub == 0 || order % sub != 0) throw domain_error("root_of_unity: sub-order must divide order");
  long e = power % static_cast<long>(sub);
  if (e < 0) e += sub;
  return zeta(order).pow(static_cast<long>(order / sub) * e);
}

bool CycloScalar::is_zero() const {
  for (const Rat& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloScalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CycloScalar::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rat CycloScalar::rational_value() const {
  if (!is_rational()) throw domain_error("rational_value: element not rational");
  return coeffs_[0];
}

void CycloScalar::check_same_order(const CycloScalar& a, const CycloScalar& b) {
  if (a.order_ != b.order_) throw domain_error("mismatched cyclotomic orders");
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar r(*this);
  for (Rat& c : r.coeffs_) c = -c;
  return r;
}

CycloScalar CycloScalar::operator+(const CycloScalar& o) const {
  check_same_order(*this, o);
  CycloScalar r(*this);
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

CycloScalar CycloScalar::operator-(const CycloScalar& o) const {
  check_same_order(*this, o);
  CycloScalar r(*this);
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

CycloScalar CycloScalar::operator*(const CycloScalar& o) const {
  check_same_order(*this, o);
  const CycloBasis& basis = cyclo_basis(order_);
  const unsigned deg = basis.degree;
  std::vector<Rat> conv(2 * deg - 1, Rat(0));
  for (unsigned i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (unsigned j = 0; j < deg; ++j) {
      if (o.coeffs_[j] == 0) continue;
      conv[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  CycloScalar r(order_);
  for (unsigned i = 0; i < deg; ++i) r.coeffs_[i] = conv[i];
  for (unsigned j = deg; j < 2 * deg - 1; ++j) {
    if (conv[j] == 0) continue;
    const std::vector<Int>& row = basis.high_powers[j - deg];
    for (unsigned i = 0; i < deg; ++i) {
      if (row[i] != 0) r.coeffs_[i] += conv[j] * Rat(row[i]);
    }
  }
  return r;
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw domain_error("division by zero");
  const CycloBasis& basis = cyclo_basis(order_);
  const unsigned deg = basis.degree;
  if (deg == 1) {
    CycloScalar r(order_);
    r.coeffs_[0] = Rat(1) / coeffs_[0];
    return r;
  }
  // Extended Euclid in Q[x] against Phi_m (irreducible over Q): find u with
  // u * this == 1 (mod Phi_m).
  using Poly = std::vector<Rat>;
  auto degree_of = [](const Poly& p) -> long {
    for (size_t i = p.size(); i-- > 0;)
      if (p[i] != 0) return static_cast<long>(i);
    return -1;
  };
  Poly r0(deg + 1), r1(coeffs_.begin(), coeffs_.end());
  for (unsigned i = 0; i <= deg; ++i) r0[i] = Rat(basis.min_poly[i]);
  Poly s0{Rat(0)}, s1{Rat(1)};  // coefficients of the second argument
  while (true) {
    long d1 = degree_of(r1);
    if (d1 < 0) throw domain_error("inverse: gcd degenerated");  // cannot happen: Phi irreducible
    if (d1 == 0) break;
    long d0 = degree_of(r0);
    // r0 = r0 - q * r1, classical remainder loop
    Poly q(static_cast<size_t>(d0 - d1 + 1), Rat(0));
    Poly rem = r0;
    for (long i = d0; i >= d1; --i) {
      if (rem[static_cast<size_t>(i)] == 0) continue;
      Rat c = rem[static_cast<size_t>(i)] / r1[static_cast<size_t>(d1)];
      q[static_cast<size_t>(i - d1)] = c;
      for (long j = 0; j <= d1; ++j) rem[static_cast<size_t>(i - d1 + j)] -= c * r1[static_cast<size_t>(j)];
    }
    // s_next = s0 - q * s1
    Poly snext(std::max(s0.size(), q.size() + s1.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) snext[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) snext[i + j] -= q[i] * s1[j];
    }
    r0 = std::move(rem);
    s0 = std::move(s1);
    std::swap(r0, r1);
    s1 = std::move(snext);
  }
  Rat lead = r1[0];  // constant gcd
  CycloScalar result(order_);
  // s1 * this == r1 (mod Phi); scale to make it 1 and reduce mod Phi.
  // Fold high powers downward: z^i = z^(i-deg) * z^deg.
  Poly s = s1;
  for (size_t i = s.size(); i-- > deg;) {
    if (s[i] == 0) continue;
    Rat c = s[i];
    s[i] = 0;
    for (unsigned t = 0; t < deg; ++t) {
      if (basis.min_poly[t] != 0) s[i - deg + t] -= c * Rat(basis.min_poly[t]);
    }
  }
  for (unsigned i = 0; i < deg && i < s.size(); ++i) result.coeffs_[i] = s[i] / lead;
  return result;
}

CycloScalar CycloScalar::operator/(const CycloScalar& o) const {
  check_same_order(*this, o);
  return *this * o.inverse();
}

CycloScalar CycloScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloScalar acc = one(order_);
  CycloScalar base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool CycloScalar::operator<(const CycloScalar& o) const {
  if (order_ != o.order_) return order_ < o.order_;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    int c = cmp(coeffs_[i], o.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

CycloScalar CycloScalar::scaled(const Rat& r) const {
  CycloScalar out(*this);
  for (Rat& c : out.coeffs_) c *= r;
  return out;
}

CycloScalar CycloScalar::promoted(unsigned new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0) throw domain_error("promoted: new order must be a multiple");
  CycloScalar z = CycloScalar::root_of_unity(new_order, order_);
  CycloScalar acc = CycloScalar::zero(new_order);
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * z + CycloScalar(new_order, coeffs_[i]);
  }
  return acc;
}

Int CycloScalar::denominator_lcm() const {
  Int l(1);
  for (const Rat& c : coeffs_) l = int_lcm(l, c.get_den());
  return l;
}

std::string CycloScalar::wire_string() const {
  Int den = denominator_lcm();
  std::ostringstream poly;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    Int num = coeffs_[i].get_num() * (den / coeffs_[i].get_den());
    if (num == 0) continue;
    if (first) {
      if (num < 0) poly << "-";
      first = false;
    } else {
      poly << (num < 0 ? " - " : " + ");
    }
    Int a = abs(num);
    if (i == 0) {
      poly << a.get_str();
    } else {
      if (a != 1) poly << a.get_str() << "*";
      poly << "z";
      if (i > 1) poly << "^" << i;
    }
  }
  if (first) return "0";
  if (den == 1) return poly.str();
  return "(1/" + den.get_str() + ")*(" + poly.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const CycloScalar& s) { return os << s.wire_string(); }

}  // namespace lincat
