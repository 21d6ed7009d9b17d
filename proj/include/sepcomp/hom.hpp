#pragma once

#include <optional>
#include <vector>

#include "sepcomp/code.hpp"

namespace sepcomp {

/// A group homomorphism H: A -> B between two codes over the same group,
/// stored as a total map on A's enumerated elements. Build from generator
/// images (extended along A's derivations) or from a full element map;
/// both constructions verify the homomorphism law on every pair.
class CodeHom {
 public:
  /// One image per declared generator of `source`. Throws HomBuildError with
  /// code ImageOutsideTarget, NotWellDefined (conflicting derivations for an
  /// element) or NotHomomorphic (a failing pair).
  static CodeHom build(FunctionGroup source, FunctionGroup target,
                       const std::vector<GFunction>& generator_images);

  /// Non-throwing variant for enumeration loops.
  static std::optional<CodeHom> try_build(const FunctionGroup& source,
                                          const FunctionGroup& target,
                                          const std::vector<GFunction>& generator_images);

  /// element_map[i] = target index of the image of source element i.
  static CodeHom from_element_map(FunctionGroup source, FunctionGroup target,
                                  std::vector<int> element_map);

  const FunctionGroup& source() const { return source_; }
  const FunctionGroup& target() const { return target_; }
  const std::vector<int>& element_map() const { return element_map_; }
  int image_index(int i) const { return element_map_[static_cast<std::size_t>(i)]; }
  const GFunction& image(int i) const { return target_.element(image_index(i)); }
  /// Value of (Hf)(y) for f = source element i.
  int image_value(int i, int y) const { return image(i).value_at(y); }

  /// Images of the declared generators, recovered from the element map.
  std::vector<GFunction> generator_images() const;

  bool is_injective() const;
  /// Injective with image all of B.
  bool is_bijective() const;
  /// The inverse hom; only for bijective maps.
  std::optional<CodeHom> inverse() const;

 private:
  CodeHom(FunctionGroup source, FunctionGroup target, std::vector<int> element_map)
      : source_(std::move(source)), target_(std::move(target)),
        element_map_(std::move(element_map)) {}

  static std::vector<int> extend_generator_images(const FunctionGroup& source,
                                                  const FunctionGroup& target,
                                                  const std::vector<GFunction>& generator_images);
  static void verify_hom_law(const FunctionGroup& source, const FunctionGroup& target,
                             const std::vector<int>& element_map);

  FunctionGroup source_;
  FunctionGroup target_;
  std::vector<int> element_map_;
};

/// The evaluation of H at one target point: phi(f) = Hf(y), a group
/// homomorphism A -> G.
class PointFunctional {
 public:
  PointFunctional(FunctionGroup source, std::vector<int> values);

  const FunctionGroup& source() const { return source_; }
  int value(int element) const { return values_[static_cast<std::size_t>(element)]; }
  const std::vector<int>& values() const { return values_; }
  bool is_null() const { return is_null_; }

 private:
  FunctionGroup source_;
  std::vector<int> values_;
  bool is_null_ = true;
};

PointFunctional point_functional(const CodeHom& hom, int y);
/// delta_x on a code: f -> f(x).
PointFunctional evaluation_functional(const FunctionGroup& code, int x);

struct ElementPairWitness {
  int f = -1;
  int g = -1;
};

struct SeparatingVerdict {
  bool holds = false;
  std::optional<ElementPairWitness> witness;  // first violating pair
};

/// Disjoint cozeros in A map to disjoint cozeros in B.
SeparatingVerdict is_separating(const CodeHom& hom);

/// Functional variant: disjoint-cozero pairs never both evaluate away from
/// the identity.
SeparatingVerdict is_separating(const PointFunctional& phi);

enum class BiseparatingFailure { None, NotBijective, ForwardNotSeparating, InverseNotSeparating };

struct BiseparatingVerdict {
  bool holds = false;
  BiseparatingFailure failure = BiseparatingFailure::None;
  std::optional<ElementPairWitness> witness;

  const char* failure_name() const;
};

/// Bijective with H and H^-1 both separating.
BiseparatingVerdict is_biseparating(const CodeHom& hom);

}  // namespace sepcomp
