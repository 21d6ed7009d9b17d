#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sepcomp/group.hpp"
#include "sepcomp/space.hpp"

namespace sepcomp {

inline constexpr std::size_t kDefaultCodeCap = 4096;

/// A G-valued function on a point space: one group-element index per point.
/// The ambient space and group are carried by the owning FunctionGroup.
struct GFunction {
  std::vector<int> values;

  int value_at(int point) const { return values[static_cast<std::size_t>(point)]; }
  int size() const { return static_cast<int>(values.size()); }

  bool operator==(const GFunction& other) const { return values == other.values; }
  bool operator<(const GFunction& other) const { return values < other.values; }
};

GFunction constant_function(int n_points, int element);
GFunction pointwise_mul(const FiniteGroup& g, const GFunction& a, const GFunction& b);
GFunction pointwise_inv(const FiniteGroup& g, const GFunction& a);

/// Z(f): points where f takes the identity.
PointSet zero_set(const FiniteGroup& g, const GFunction& f);
/// coz(f): complement of Z(f).
PointSet cozero_set(const FiniteGroup& g, const GFunction& f);

/// How element i of a generated code arose: from generator `gen`, as the
/// product of earlier elements `left * right`, or as the injected identity
/// of an empty generating set (all fields -1).
struct Derivation {
  int gen = -1;
  int left = -1;
  int right = -1;
};

/// A subgroup of C(X, G), enumerated element by element.
///
/// Element order is the canonical one every downstream witness scan relies
/// on: the generators in declaration order (duplicates dropped), then
/// breadth-first waves of new products, each wave sorted lexicographically
/// by value tuple. Cheap to copy; the payload is shared and immutable.
class FunctionGroup {
 public:
  /// Closes `generators` under pointwise product. An empty generator list
  /// yields the trivial code {e}. Throws SizeOverflowError past `cap`.
  static FunctionGroup generate(SpacePtr space, GroupPtr group,
                                std::vector<GFunction> generators,
                                std::size_t cap = kDefaultCodeCap);

  const PointSpace& space() const { return *d_->space; }
  const SpacePtr& space_ptr() const { return d_->space; }
  const FiniteGroup& group() const { return *d_->group; }
  const GroupPtr& group_ptr() const { return d_->group; }

  const std::vector<GFunction>& generators() const { return d_->generators; }
  const std::vector<GFunction>& elements() const { return d_->elements; }
  int size() const { return static_cast<int>(d_->elements.size()); }
  const GFunction& element(int i) const { return d_->elements[static_cast<std::size_t>(i)]; }
  const Derivation& derivation(int i) const { return d_->derivations[static_cast<std::size_t>(i)]; }

  /// Index of `f` in the element list, or -1.
  int index_of(const GFunction& f) const;
  bool contains(const GFunction& f) const { return index_of(f) >= 0; }
  /// Index of the constant-identity element.
  int identity_index() const { return d_->identity_index; }
  /// Index of element(i) * element(j).
  int product_index(int i, int j) const;
  /// Index of element(i)^-1.
  int inverse_index(int i) const;

  /// Z(element(i)) as a precomputed mask.
  std::uint32_t zero_mask(int i) const { return d_->zero_masks[static_cast<std::size_t>(i)]; }
  std::uint32_t cozero_mask(int i) const {
    return space().full_mask() & ~zero_mask(i);
  }

  /// Same space labels and same group table.
  bool same_universe(const FunctionGroup& other) const;
  /// Same element set (order ignored).
  bool same_elements(const FunctionGroup& other) const;

 private:
  struct Data {
    SpacePtr space;
    GroupPtr group;
    std::vector<GFunction> generators;
    std::vector<GFunction> elements;
    std::vector<Derivation> derivations;
    std::vector<std::uint32_t> zero_masks;
    std::vector<std::uint64_t> keys;          // parallel to elements
    std::vector<std::uint32_t> sorted_order;  // element indices sorted by key
    int identity_index = -1;
  };

  explicit FunctionGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

/// The subgroup {f(x) : f in A} of G.
Subgroup evaluation_image(const FunctionGroup& code, int point);

/// {Z(f) : f in A} (deduplicated, canonical order); likewise cozero_family.
SetFamily zero_family(const FunctionGroup& code);
SetFamily cozero_family(const FunctionGroup& code);

struct PointPairWitness {
  int first = -1;
  int second = -1;
};

struct SeparationVerdict {
  bool holds = false;
  std::optional<PointPairWitness> witness;  // first failing pair
};

struct DensityVerdict {
  bool holds = false;
  std::optional<int> witness_point;
};

struct ControllabilityWitness {
  int element = -1;  // index of f in the element order
  std::uint32_t d1_mask = 0;
  std::uint32_t d2_mask = 0;
};

struct ControllabilityVerdict {
  bool holds = false;
  std::optional<ControllabilityWitness> witness;
};

/// For every ordered pair of distinct points (x1, x2) some f has
/// f(x1) != e and f(x2) = e. Witness: first failing ordered pair.
SeparationVerdict separates_points(const FunctionGroup& code);

/// For every unordered pair of distinct points there are f1, f2 with
/// x_i in coz(f_i) and disjoint cozeros. Witness: first failing pair.
SeparationVerdict strongly_separates_points(const FunctionGroup& code);

/// Every evaluation image equals G. Witness: first failing point.
DensityVerdict pointwise_dense(const FunctionGroup& code);

/// For every f in A and disjoint D1, D2 in sigma(Z(A)) there are
/// U in sigma(coz(A)) and g in A with D1 <= U <= X \ D2, g = f on D1 and
/// g = e on Z(f) and outside U. Witness: first (f, D1, D2) without (U, g),
/// scanning f in element order, then D1, then D2 in family order.
ControllabilityVerdict controllable(const FunctionGroup& code,
                                    std::size_t closure_cap = kDefaultClosureCap);

/// The three structural hypotheses of the representation theorem.
struct HypothesisReport {
  SeparationVerdict separates;
  DensityVerdict dense;
  ControllabilityVerdict control;

  bool all_hold() const { return separates.holds && dense.holds && control.holds; }
};

HypothesisReport check_hypotheses(const FunctionGroup& code,
                                  std::size_t closure_cap = kDefaultClosureCap);

/// Full code C(X, G): every function, generated from point indicators.
FunctionGroup full_code(SpacePtr space, GroupPtr group, std::size_t cap = kDefaultCodeCap);

}  // namespace sepcomp
