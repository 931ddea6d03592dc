#include "lincat/ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace lincat {

namespace {

using Poly = std::vector<unsigned>;  // coefficients mod p, ascending

Poly poly_mod_mul(const Poly& a, const Poly& b, const Poly& modulus, unsigned p) {
  const size_t k = modulus.size() - 1;
  std::vector<unsigned> conv(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) conv[i + j] = (conv[i + j] + a[i] * b[j]) % p;
  // reduce by the monic modulus
  for (size_t i = conv.size(); i-- > k;) {
    unsigned c = conv[i];
    if (c == 0) continue;
    conv[i] = 0;
    for (size_t t = 0; t < k; ++t) {
      unsigned sub = (c * modulus[t]) % p;
      conv[i - k + t] = (conv[i - k + t] + p * p - sub) % p;
    }
  }
  conv.resize(k);
  return conv;
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](unsigned c) { return c == 0; });
}

bool is_prime_small(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Remainder of a mod b over F_p (b must have nonzero leading coefficient).
Poly poly_rem(Poly a, const Poly& b, unsigned p) {
  auto deg = [](const Poly& f) -> long {
    for (size_t i = f.size(); i-- > 0;)
      if (f[i] != 0) return static_cast<long>(i);
    return -1;
  };
  long db = deg(b);
  unsigned lead = b[static_cast<size_t>(db)];
  unsigned lead_inv = 1;
  for (unsigned t = 1; t < p; ++t)
    if ((t * lead) % p == 1) lead_inv = t;
  while (true) {
    long da = deg(a);
    if (da < db) break;
    unsigned c = (a[static_cast<size_t>(da)] * lead_inv) % p;
    for (long j = 0; j <= db; ++j) {
      unsigned sub = (c * b[static_cast<size_t>(j)]) % p;
      size_t idx = static_cast<size_t>(da - db + j);
      a[idx] = (a[idx] + p * p - sub) % p;
    }
  }
  return a;
}

bool is_irreducible(const Poly& f, unsigned p) {
  auto deg = [](const Poly& g) -> long {
    for (size_t i = g.size(); i-- > 0;)
      if (g[i] != 0) return static_cast<long>(i);
    return -1;
  };
  long k = deg(f);
  if (k <= 0) return false;
  if (k == 1) return true;
  // trial division by all monic polynomials of degree 1..k/2
  for (long d = 1; 2 * d <= k; ++d) {
    unsigned long count = 1;
    for (long i = 0; i < d; ++i) count *= p;
    for (unsigned long code = 0; code < count; ++code) {
      Poly g(static_cast<size_t>(d) + 1, 0);
      unsigned long c = code;
      for (long i = 0; i < d; ++i) {
        g[static_cast<size_t>(i)] = static_cast<unsigned>(c % p);
        c /= p;
      }
      g[static_cast<size_t>(d)] = 1;
      if (poly_is_zero(poly_rem(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

FieldDescriptor::FieldDescriptor(unsigned p, unsigned k, std::vector<unsigned> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  if (!is_prime_small(p)) throw domain_error("FieldDescriptor: characteristic must be prime");
  if (k == 0) throw domain_error("FieldDescriptor: degree must be positive");
  unsigned long qq = 1;
  for (unsigned i = 0; i < k; ++i) qq *= p;
  if (qq > 4096) throw domain_error("FieldDescriptor: field too large for table representation");
  q_ = static_cast<unsigned>(qq);
  if (modulus_.size() != k_ + 1 || modulus_[k_] % p_ != 1)
    throw domain_error("FieldDescriptor: modulus must be monic of degree k");
  for (unsigned& c : modulus_) c %= p_;
  if (k_ > 1 && !is_irreducible(modulus_, p_))
    throw domain_error("FieldDescriptor: modulus is reducible");

  auto decode = [&](std::uint32_t a) {
    Poly f(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
      f[i] = a % p_;
      a /= p_;
    }
    return f;
  };
  auto encode = [&](const Poly& f) {
    std::uint32_t a = 0;
    for (unsigned i = k_; i-- > 0;) a = a * p_ + f[i];
    return a;
  };

  add_.resize(static_cast<size_t>(q_) * q_);
  mul_.resize(static_cast<size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Poly fa = decode(a);
    Poly na(k_);
    for (unsigned i = 0; i < k_; ++i) na[i] = (p_ - fa[i]) % p_;
    neg_[a] = encode(na);
    for (std::uint32_t b = 0; b < q_; ++b) {
      Poly fb = decode(b);
      Poly s(k_);
      for (unsigned i = 0; i < k_; ++i) s[i] = (fa[i] + fb[i]) % p_;
      add_[static_cast<size_t>(a) * q_ + b] = encode(s);
      mul_[static_cast<size_t>(a) * q_ + b] = encode(poly_mod_mul(fa, fb, modulus_, p_));
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul(a, b) == 1) inv_[a] = b;

  // exhaustive order test for the generator
  for (std::uint32_t g = 1; g < q_; ++g) {
    unsigned ord = 1;
    std::uint32_t x = g;
    while (x != 1) {
      x = mul(x, g);
      ++ord;
    }
    if (ord == q_ - 1) {
      generator_ = g;
      break;
    }
  }
  if (generator_ == 0) throw domain_error("FieldDescriptor: no generator found");

  dlog_.assign(q_, 0);
  std::uint32_t x = 1;
  for (unsigned e = 0; e + 1 < q_; ++e) {
    dlog_[x] = e;
    x = mul(x, generator_);
  }
}

std::uint32_t FieldDescriptor::inv(std::uint32_t a) const {
  if (a == 0) throw domain_error("field inverse of zero");
  return inv_[a];
}

std::uint32_t FieldDescriptor::pow(std::uint32_t a, unsigned long e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

unsigned FieldDescriptor::dlog(std::uint32_t a) const {
  if (a == 0) throw domain_error("dlog of zero");
  return dlog_[a];
}

std::vector<unsigned> FieldDescriptor::coordinates(std::uint32_t a) const {
  std::vector<unsigned> c(k_);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::string FieldDescriptor::element_name(std::uint32_t a) const {
  std::ostringstream os;
  os << a;
  return os.str();
}

std::shared_ptr<const FieldDescriptor> FieldDescriptor::standard(unsigned q) {
  static std::map<unsigned, std::shared_ptr<const FieldDescriptor>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;

  unsigned p = 0, k = 0;
  for (unsigned d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      unsigned m = q, kk = 0;
      while (m % d == 0) {
        m /= d;
        ++kk;
      }
      if (m != 1) throw domain_error("standard field: size must be a prime power");
      k = kk;
      break;
    }
  }
  if (p == 0) throw domain_error("standard field: size must be >= 2");

  std::vector<unsigned> modulus;
  if (k == 1) {
    modulus = {0, 1};  // the element x; any monic linear works for F_p
  } else {
    // lexicographically smallest monic irreducible of degree k
    unsigned long count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (unsigned long code = 0; code < count; ++code) {
      std::vector<unsigned> f(k + 1, 0);
      unsigned long c = code;
      for (unsigned i = 0; i < k; ++i) {
        f[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      f[k] = 1;
      if (is_irreducible(f, p)) {
        modulus = f;
        break;
      }
    }
  }
  auto fd = std::make_shared<const FieldDescriptor>(p, k, modulus);
  cache.emplace(q, fd);
  return fd;
}

// ---------------------------------------------------------------------------

Character::Character(FieldPtr field, unsigned exponent, unsigned order)
    : field_(std::move(field)), exponent_(exponent), order_(order) {
  const unsigned q = field_->size();
  if (order_ == 0 || order_ % (q - 1) != 0)
    throw domain_error("Character: cyclotomic order must be divisible by q-1");
  exponent_ %= (q - 1);
  table_.assign(q, CycloScalar::zero(order_));  // chi(0) = 0
  for (std::uint32_t a = 1; a < q; ++a) {
    long e = static_cast<long>(field_->dlog(a)) * static_cast<long>(exponent_);
    table_[a] = CycloScalar::root_of_unity(order_, q - 1, e);
  }
}

Character Character::inverse() const {
  const unsigned q = field_->size();
  return Character(field_, (q - 1 - exponent_) % (q - 1), order_);
}

std::vector<Character> characters(const FieldPtr& field, unsigned order) {
  const unsigned q = field->size();
  if (order % (q - 1) != 0) throw domain_error("characters: order must be divisible by q-1");
  std::vector<Character> out;
  out.reserve(q - 1);
  for (unsigned j = 0; j + 1 < q; ++j) out.emplace_back(field, j, order);
  return out;
}

// ---------------------------------------------------------------------------

MonAlgElem::MonAlgElem(FieldPtr field, unsigned order)
    : field_(std::move(field)), order_(order), coeffs_(field_->size(), CycloScalar::zero(order)) {}

MonAlgElem MonAlgElem::basis(FieldPtr field, unsigned order, std::uint32_t a) {
  MonAlgElem e(std::move(field), order);
  e.coeffs_[a] = CycloScalar::one(order);
  return e;
}

void MonAlgElem::set_coeff(std::uint32_t a, CycloScalar v) {
  if (v.order() != order_) throw domain_error("MonAlgElem: scalar order mismatch");
  coeffs_[a] = std::move(v);
}

MonAlgElem MonAlgElem::operator+(const MonAlgElem& o) const {
  if (field_ != o.field_ || order_ != o.order_) throw domain_error("MonAlgElem: mixed algebras");
  MonAlgElem r = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

MonAlgElem MonAlgElem::operator-(const MonAlgElem& o) const {
  if (field_ != o.field_ || order_ != o.order_) throw domain_error("MonAlgElem: mixed algebras");
  MonAlgElem r = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

MonAlgElem MonAlgElem::operator*(const MonAlgElem& o) const {
  if (field_ != o.field_ || order_ != o.order_) throw domain_error("MonAlgElem: mixed algebras");
  MonAlgElem r(field_, order_);
  const unsigned q = field_->size();
  for (std::uint32_t a = 0; a < q; ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (std::uint32_t b = 0; b < q; ++b) {
      if (o.coeffs_[b].is_zero()) continue;
      r.coeffs_[field_->mul(a, b)] += coeffs_[a] * o.coeffs_[b];
    }
  }
  return r;
}

MonAlgElem MonAlgElem::scaled(const CycloScalar& c) const {
  MonAlgElem r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

bool MonAlgElem::operator==(const MonAlgElem& o) const {
  return field_ == o.field_ && order_ == o.order_ && coeffs_ == o.coeffs_;
}

bool MonAlgElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CycloScalar& c) { return c.is_zero(); });
}

MonAlgElem idempotent_zero(const FieldPtr& field, unsigned order) {
  return MonAlgElem::basis(field, order, 0);
}

MonAlgElem idempotent_chi(const Character& chi) {
  const FieldPtr& F = chi.field();
  const unsigned q = F->size();
  const unsigned m = chi.order();
  MonAlgElem e(F, m);
  if (chi.is_trivial()) e.set_coeff(0, -CycloScalar::one(m));
  Character chi_inv = chi.inverse();
  CycloScalar w = CycloScalar::from_rational(Rat(1, q - 1), m);
  for (std::uint32_t a = 1; a < q; ++a) e.set_coeff(a, chi_inv(a) * w);
  return e;
}

}  // namespace lincat
