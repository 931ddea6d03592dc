#include "lincat/category.hpp"

#include <sstream>

namespace lincat {

void SourceCategory::check_object(const SourceObject& x) const {
  if (x.dims.size() != component_count()) throw domain_error("object has wrong component count");
}

SourceObject SourceCategory::make_object(std::vector<std::uint32_t> dims) const {
  SourceObject x{std::move(dims)};
  check_object(x);
  return x;
}

SourceObject SourceCategory::zero_object() const {
  return SourceObject{std::vector<std::uint32_t>(component_count(), 0)};
}

SourceObject SourceCategory::unit_object() const {
  return SourceObject{std::vector<std::uint32_t>(component_count(), 1)};
}

SourceMorphism SourceCategory::identity(const SourceObject& x) const {
  check_object(x);
  SourceMorphism f{x, x, {}};
  f.entries.resize(component_count());
  for (size_t c = 0; c < component_count(); ++c) {
    const std::uint32_t d = x.dims[c];
    f.entries[c].assign(static_cast<size_t>(d) * d, 0);
    for (std::uint32_t i = 0; i < d; ++i) f.entries[c][static_cast<size_t>(i) * d + i] = 1;
  }
  return f;
}

SourceMorphism SourceCategory::zero_morphism(const SourceObject& dom, const SourceObject& cod) const {
  check_object(dom);
  check_object(cod);
  SourceMorphism f{dom, cod, {}};
  f.entries.resize(component_count());
  for (size_t c = 0; c < component_count(); ++c)
    f.entries[c].assign(static_cast<size_t>(cod.dims[c]) * dom.dims[c], 0);
  return f;
}

SourceMorphism SourceCategory::compose(const SourceMorphism& g, const SourceMorphism& f) const {
  if (f.cod != g.dom) throw domain_error("compose: domain mismatch");
  SourceMorphism r{f.dom, g.cod, {}};
  r.entries.resize(component_count());
  for (size_t c = 0; c < component_count(); ++c) {
    const FieldDescriptor& F = *component_field(c);
    const std::uint32_t n = g.cod.dims[c], m = g.dom.dims[c], l = f.dom.dims[c];
    r.entries[c].assign(static_cast<size_t>(n) * l, 0);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < m; ++k) {
        std::uint32_t gik = g.entries[c][static_cast<size_t>(i) * m + k];
        if (gik == 0) continue;
        for (std::uint32_t j = 0; j < l; ++j) {
          std::uint32_t fkj = f.entries[c][static_cast<size_t>(k) * l + j];
          if (fkj == 0) continue;
          auto& acc = r.entries[c][static_cast<size_t>(i) * l + j];
          acc = F.add(acc, F.mul(gik, fkj));
        }
      }
  }
  return r;
}

Int SourceCategory::hom_count(const SourceObject& dom, const SourceObject& cod) const {
  check_object(dom);
  check_object(cod);
  Int n(1);
  for (size_t c = 0; c < component_count(); ++c) {
    unsigned long cells = static_cast<unsigned long>(dom.dims[c]) * cod.dims[c];
    n *= int_pow(Int(component_field(c)->size()), cells);
  }
  return n;
}

SourceMorphism SourceCategory::hom_at(const SourceObject& dom, const SourceObject& cod,
                                      const Int& index) const {
  SourceMorphism f = zero_morphism(dom, cod);
  Int rest = index;
  // last component / last entry is the least significant digit
  for (size_t c = component_count(); c-- > 0;) {
    const Int q(component_field(c)->size());
    auto& ent = f.entries[c];
    for (size_t t = ent.size(); t-- > 0;) {
      Int digit = rest % q;
      ent[t] = static_cast<std::uint32_t>(digit.get_ui());
      rest /= q;
    }
  }
  if (rest != 0) throw domain_error("hom_at: index out of range");
  return f;
}

Int SourceCategory::hom_index(const SourceMorphism& f) const {
  Int idx(0);
  for (size_t c = 0; c < component_count(); ++c) {
    const Int q(component_field(c)->size());
    for (std::uint32_t e : f.entries[c]) idx = idx * q + e;
  }
  return idx;
}

std::vector<SourceMorphism> SourceCategory::hom_enumerate(const SourceObject& dom,
                                                          const SourceObject& cod,
                                                          const Int& cap) const {
  Int n = hom_count(dom, cod);
  if (n > cap) {
    std::ostringstream os;
    os << "hom_enumerate: hom-set size " << n << " exceeds cap " << cap;
    throw cap_exceeded(os.str());
  }
  std::vector<SourceMorphism> out;
  out.reserve(static_cast<size_t>(n.get_ui()));
  for (Int i = 0; i < n; ++i) out.push_back(hom_at(dom, cod, i));
  return out;
}

SourceObject SourceCategory::tensor(const SourceObject& x, const SourceObject& y) const {
  check_object(x);
  check_object(y);
  SourceObject t = x;
  for (size_t c = 0; c < component_count(); ++c) t.dims[c] *= y.dims[c];
  return t;
}

SourceMorphism SourceCategory::tensor(const SourceMorphism& f, const SourceMorphism& g) const {
  SourceMorphism r{tensor(f.dom, g.dom), tensor(f.cod, g.cod), {}};
  r.entries.resize(component_count());
  for (size_t c = 0; c < component_count(); ++c) {
    const FieldDescriptor& F = *component_field(c);
    const std::uint32_t fr = f.cod.dims[c], fc = f.dom.dims[c];
    const std::uint32_t gr = g.cod.dims[c], gc = g.dom.dims[c];
    r.entries[c].assign(static_cast<size_t>(fr) * gr * fc * gc, 0);
    const std::uint32_t rc = fc * gc;
    for (std::uint32_t i = 0; i < fr; ++i)
      for (std::uint32_t j = 0; j < fc; ++j) {
        std::uint32_t fij = f.entries[c][static_cast<size_t>(i) * fc + j];
        if (fij == 0) continue;
        for (std::uint32_t s = 0; s < gr; ++s)
          for (std::uint32_t t = 0; t < gc; ++t) {
            std::uint32_t gst = g.entries[c][static_cast<size_t>(s) * gc + t];
            if (gst == 0) continue;
            r.entries[c][static_cast<size_t>(i * gr + s) * rc + (j * gc + t)] = F.mul(fij, gst);
          }
      }
  }
  return r;
}

SourceMorphism SourceCategory::braiding(const SourceObject& x, const SourceObject& y) const {
  SourceObject xy = tensor(x, y), yx = tensor(y, x);
  SourceMorphism f = zero_morphism(xy, yx);
  for (size_t c = 0; c < component_count(); ++c) {
    const std::uint32_t dx = x.dims[c], dy = y.dims[c];
    const std::uint32_t n = dx * dy;
    for (std::uint32_t i = 0; i < dx; ++i)
      for (std::uint32_t j = 0; j < dy; ++j)
        f.entries[c][static_cast<size_t>(j * dx + i) * n + (i * dy + j)] = 1;
  }
  return f;
}

SourceMorphism SourceCategory::coevaluation(const SourceObject& x) const {
  // alpha: 1 -> x (x) x^dual, the column sum_i e_i (x) e_i*
  SourceMorphism f = zero_morphism(unit_object(), tensor(x, dual(x)));
  for (size_t c = 0; c < component_count(); ++c) {
    const std::uint32_t d = x.dims[c];
    for (std::uint32_t i = 0; i < d; ++i) f.entries[c][static_cast<size_t>(i) * d + i] = 1;
  }
  return f;
}

SourceMorphism SourceCategory::evaluation(const SourceObject& x) const {
  // beta: x^dual (x) x -> 1, the pairing row
  SourceMorphism f = zero_morphism(tensor(dual(x), x), unit_object());
  for (size_t c = 0; c < component_count(); ++c) {
    const std::uint32_t d = x.dims[c];
    for (std::uint32_t i = 0; i < d; ++i) f.entries[c][static_cast<size_t>(i) * d + i] = 1;
  }
  return f;
}

SourceMorphism SourceCategory::dual_morphism(const SourceMorphism& f) const {
  SourceMorphism r{dual(f.cod), dual(f.dom), {}};
  r.entries.resize(component_count());
  for (size_t c = 0; c < component_count(); ++c) {
    const std::uint32_t n = f.cod.dims[c], m = f.dom.dims[c];
    r.entries[c].assign(static_cast<size_t>(m) * n, 0);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < m; ++j)
        r.entries[c][static_cast<size_t>(j) * n + i] = f.entries[c][static_cast<size_t>(i) * m + j];
  }
  return r;
}

SourceMorphism SourceCategory::scalar_morphism(const std::vector<std::uint32_t>& a,
                                               const SourceObject& x) const {
  if (a.size() != component_count()) throw domain_error("scalar_morphism: component mismatch");
  SourceMorphism f = zero_morphism(x, x);
  for (size_t c = 0; c < component_count(); ++c) {
    const std::uint32_t d = x.dims[c];
    for (std::uint32_t i = 0; i < d; ++i) f.entries[c][static_cast<size_t>(i) * d + i] = a[c];
  }
  return f;
}

std::vector<std::uint32_t> SourceCategory::trace(const SourceMorphism& f) const {
  if (f.dom != f.cod) throw domain_error("trace: endomorphisms only");
  std::vector<std::uint32_t> t(component_count(), 0);
  for (size_t c = 0; c < component_count(); ++c) {
    const FieldDescriptor& F = *component_field(c);
    const std::uint32_t d = f.dom.dims[c];
    for (std::uint32_t i = 0; i < d; ++i) t[c] = F.add(t[c], f.entries[c][static_cast<size_t>(i) * d + i]);
  }
  return t;
}

std::string VecCategory::object_name(const SourceObject& x) const {
  std::ostringstream os;
  os << "V" << field_->size() << "^" << x.dims[0];
  return os.str();
}

ProductCategory::ProductCategory(std::shared_ptr<const SourceCategory> a,
                                 std::shared_ptr<const SourceCategory> b)
    : a_(std::move(a)), b_(std::move(b)), count_(a_->component_count() + b_->component_count()) {}

const FieldPtr& ProductCategory::component_field(size_t c) const {
  const size_t na = a_->component_count();
  return c < na ? a_->component_field(c) : b_->component_field(c - na);
}

std::string ProductCategory::object_name(const SourceObject& x) const {
  const size_t na = a_->component_count();
  SourceObject xa{std::vector<std::uint32_t>(x.dims.begin(), x.dims.begin() + na)};
  SourceObject xb{std::vector<std::uint32_t>(x.dims.begin() + na, x.dims.end())};
  return "(" + a_->object_name(xa) + "," + b_->object_name(xb) + ")";
}

}  // namespace lincat
