#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lincat/category.hpp"
#include "lincat/exact_matrix.hpp"

namespace lincat {

/// A morphism of the linearization k[E]: a finite k-linear combination of
/// base-category morphisms with a fixed domain and codomain. Zero terms are
/// never stored.
struct LinMorphism {
  SourceObject dom, cod;
  unsigned order = 1;  // cyclotomic order of the coefficients
  std::map<SourceMorphism, CycloScalar> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const LinMorphism&) const = default;
};

LinMorphism lin_basis(const SourceMorphism& f, unsigned order);
LinMorphism lin_zero(const SourceObject& dom, const SourceObject& cod, unsigned order);
LinMorphism lin_identity(const SourceCategory& cat, const SourceObject& x, unsigned order);
LinMorphism lin_add(const LinMorphism& a, const LinMorphism& b);
LinMorphism lin_sub(const LinMorphism& a, const LinMorphism& b);
LinMorphism lin_scale(const LinMorphism& a, const CycloScalar& c);
/// Bilinear extension of base composition: g after f.
LinMorphism lin_compose(const SourceCategory& cat, const LinMorphism& g, const LinMorphism& f);
/// Bilinear extension of the base tensor product.
LinMorphism lin_tensor(const SourceCategory& cat, const LinMorphism& f, const LinMorphism& g);

/// An object of the additive envelope k[E]^(+): a formal finite direct sum.
struct AddObject {
  std::vector<SourceObject> summands;

  bool operator==(const AddObject&) const = default;
};

AddObject add_tensor(const SourceCategory& cat, const AddObject& a, const AddObject& b);

/// A morphism of k[E]^(+): a matrix of LinMorphisms, composition is matrix
/// multiplication.
class LinMatrix {
 public:
  LinMatrix(const AddObject& dom, const AddObject& cod, unsigned order);
  static LinMatrix identity(const SourceCategory& cat, const AddObject& a, unsigned order);

  const AddObject& dom() const { return dom_; }
  const AddObject& cod() const { return cod_; }
  unsigned order() const { return order_; }
  size_t rows() const { return cod_.summands.size(); }
  size_t cols() const { return dom_.summands.size(); }

  const LinMorphism& at(size_t i, size_t j) const { return e_[i * cols() + j]; }
  void set(size_t i, size_t j, LinMorphism f);

  LinMatrix compose(const SourceCategory& cat, const LinMatrix& f) const;  // this after f
  LinMatrix add(const LinMatrix& o) const;
  LinMatrix sub(const LinMatrix& o) const;
  LinMatrix scaled(const CycloScalar& c) const;
  LinMatrix tensor(const SourceCategory& cat, const LinMatrix& o) const;
  bool operator==(const LinMatrix& o) const { return dom_ == o.dom_ && cod_ == o.cod_ && e_ == o.e_; }
  bool is_zero() const;

 private:
  AddObject dom_, cod_;
  unsigned order_;
  std::vector<LinMorphism> e_;
};

/// An object of the additive-Karoubi envelope k[E]^#: a carrier direct sum
/// together with a splitting idempotent, verified at construction.
struct KarObject {
  AddObject carrier;
  LinMatrix idem;
};

KarObject make_kar_object(const SourceCategory& cat, AddObject carrier, LinMatrix idem);
/// [x] with the identity idempotent.
KarObject kar_from_object(const SourceCategory& cat, const SourceObject& x, unsigned order);
KarObject kar_tensor(const SourceCategory& cat, const KarObject& a, const KarObject& b);

/// Basis of the ambient hom space Hom_{k[E]^(+)}(A, B): triples
/// (row summand, column summand, base morphism) in canonical order.
struct AmbientBasis {
  struct Elt {
    size_t row, col;
    SourceMorphism mor;
  };
  std::vector<Elt> elems;
  std::vector<std::vector<size_t>> offsets;  // block start per (row, col)
  size_t dim = 0;

  size_t index_of(const SourceCategory& cat, size_t row, size_t col, const SourceMorphism& f) const;
};

AmbientBasis ambient_basis(const SourceCategory& cat, const AddObject& dom, const AddObject& cod,
                           const Int& cap);

ExactMatrix lin_to_coords(const LinMatrix& f, const SourceCategory& cat, const AmbientBasis& basis);
LinMatrix coords_to_lin(const ExactMatrix& col, const SourceCategory& cat, const AddObject& dom,
                        const AddObject& cod, const AmbientBasis& basis, unsigned order);

/// The hom space of the Karoubi envelope: everything fixed by
/// phi |-> idem_B . phi . idem_A, as an exact column basis in the ambient
/// coordinates.
struct HomSpace {
  AmbientBasis ambient;
  ExactMatrix basis;       // dim x rank, exact kernel-of-(P - I) basis
  ExactMatrix projection;  // the ambient action of the two idempotents
  size_t dim() const { return basis.cols(); }
};

HomSpace hom_space(const SourceCategory& cat, const KarObject& a, const KarObject& b, const Int& cap);

/// The diagonal action of a monoid-algebra element on an additive object,
/// as a LinMatrix (each summand gets sum_a c_a [a . id]).
LinMatrix monalg_action(const SourceCategory& cat, const MonAlgElem& e, const AddObject& a);

/// e_chi (or e_0) applied to an object of k[E]^#: composes the scalar action
/// with the existing idempotent.
KarObject apply_idempotent(const SourceCategory& cat, const KarObject& x, const MonAlgElem& e);
/// The induced projection of an ambient hom coordinate vector.
ExactMatrix idempotent_hom_projection(const SourceCategory& cat, const MonAlgElem& e,
                                      const AddObject& dom, const AddObject& cod,
                                      const AmbientBasis& basis);

/// Counting fast path: dimension of e_chi k[S] for an F-vector-space S of
/// the given size, i.e. (|S|-1)/(q-1); independent of chi. Throws when
/// |S|-1 is not divisible by q-1.
Int dim_echi_fast(const Int& space_size, unsigned q);

/// The categorical trace of e_chi [phi] computed by the composite
/// [1] -> [x^dual (x) x] -> [x^dual (x) x] -> [1], projected by e_chi.
/// Equals chi(tr phi) with chi(0) = 0.
CycloScalar categorical_trace(const SourceCategory& cat, const SourceMorphism& phi,
                              const Character& chi);
/// The same composite before projection, as the base-field trace element.
std::uint32_t composite_trace_element(const SourceCategory& cat, const SourceMorphism& phi);

/// Duality data for a Karoubi object with a single-summand carrier:
/// the dual object and the (co)evaluation maps of eX, obtained by
/// projecting the base maps.
struct KarDualData {
  KarObject dual;
  LinMatrix coev;  // unit -> x (x) dual
  LinMatrix ev;    // dual (x) x -> unit
};

KarDualData kar_dual(const SourceCategory& cat, const KarObject& x);

/// Both snake composites for eX; returns true when they equal the identity
/// of eX (i.e. the idempotent itself).
bool snake_identities_hold(const SourceCategory& cat, const KarObject& x);

}  // namespace lincat
