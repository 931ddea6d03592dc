#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lincat/ffield.hpp"
#include "lincat/rational.hpp"

namespace lincat {

/// An object of the source category: one dimension per component field.
/// Vec instances have a single component; product instances concatenate.
struct SourceObject {
  std::vector<std::uint32_t> dims;

  bool operator==(const SourceObject&) const = default;
  auto operator<=>(const SourceObject&) const = default;
};

/// A morphism: per component, a (cod.dim x dom.dim) matrix of field element
/// indices, stored row-major.
struct SourceMorphism {
  SourceObject dom, cod;
  std::vector<std::vector<std::uint32_t>> entries;

  bool operator==(const SourceMorphism&) const = default;
  auto operator<=>(const SourceMorphism&) const = default;
};

/// The source category interface: finite hom-sets, full symmetric monoidal
/// data, duals. Objects and morphisms are plain values; all structure maps
/// live here. Two implementations ship: a single finite-field vector-space
/// instance and binary products of instances.
class SourceCategory {
 public:
  virtual ~SourceCategory() = default;

  virtual size_t component_count() const = 0;
  virtual const FieldPtr& component_field(size_t c) const = 0;
  virtual std::string object_name(const SourceObject& x) const = 0;

  SourceObject make_object(std::vector<std::uint32_t> dims) const;
  SourceObject zero_object() const;
  SourceObject unit_object() const;

  SourceMorphism identity(const SourceObject& x) const;
  SourceMorphism zero_morphism(const SourceObject& dom, const SourceObject& cod) const;
  /// g after f.
  SourceMorphism compose(const SourceMorphism& g, const SourceMorphism& f) const;

  /// Number of morphisms dom -> cod (product over components of q^(dc*dd)).
  Int hom_count(const SourceObject& dom, const SourceObject& cod) const;
  /// The index-th morphism in the canonical order: entries read row-major,
  /// component 0 first, earlier entries most significant, digits ordered by
  /// field element index.
  SourceMorphism hom_at(const SourceObject& dom, const SourceObject& cod, const Int& index) const;
  Int hom_index(const SourceMorphism& f) const;
  /// All morphisms dom -> cod in canonical order; throws cap_exceeded when
  /// the hom-set is larger than cap.
  std::vector<SourceMorphism> hom_enumerate(const SourceObject& dom, const SourceObject& cod,
                                            const Int& cap) const;

  SourceObject tensor(const SourceObject& x, const SourceObject& y) const;
  SourceMorphism tensor(const SourceMorphism& f, const SourceMorphism& g) const;
  /// The symmetry x (x) y -> y (x) x (perfect-shuffle permutation).
  SourceMorphism braiding(const SourceObject& x, const SourceObject& y) const;

  SourceObject dual(const SourceObject& x) const { return x; }
  /// alpha: 1 -> x (x) x^dual.
  SourceMorphism coevaluation(const SourceObject& x) const;
  /// beta: x^dual (x) x -> 1.
  SourceMorphism evaluation(const SourceObject& x) const;
  /// Transpose along the self-duality: Hom(x,y) -> Hom(y^dual, x^dual).
  SourceMorphism dual_morphism(const SourceMorphism& f) const;

  /// a . id_x for a scalar given per component.
  SourceMorphism scalar_morphism(const std::vector<std::uint32_t>& a, const SourceObject& x) const;
  /// Matrix trace per component.
  std::vector<std::uint32_t> trace(const SourceMorphism& f) const;

 protected:
  void check_object(const SourceObject& x) const;
};

/// Vec^f_q: objects are dimensions, morphisms matrices over F_q.
class VecCategory final : public SourceCategory {
 public:
  explicit VecCategory(FieldPtr field) : field_(std::move(field)) {}

  size_t component_count() const override { return 1; }
  const FieldPtr& component_field(size_t) const override { return field_; }
  std::string object_name(const SourceObject& x) const override;

  const FieldPtr& field() const { return field_; }

 private:
  FieldPtr field_;
};

/// Binary product of two instances: objects and morphisms are pairs, all
/// structure componentwise.
class ProductCategory final : public SourceCategory {
 public:
  ProductCategory(std::shared_ptr<const SourceCategory> a, std::shared_ptr<const SourceCategory> b);

  size_t component_count() const override { return count_; }
  const FieldPtr& component_field(size_t c) const override;
  std::string object_name(const SourceObject& x) const override;

 private:
  std::shared_ptr<const SourceCategory> a_, b_;
  size_t count_;
};

}  // namespace lincat
