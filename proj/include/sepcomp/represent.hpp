#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepcomp/hom.hpp"

namespace sepcomp {

inline constexpr std::uint64_t kDefaultSearchCap = 10'000'000;

/// True iff every f in A vanishing on all of `s` has phi(f) = e, i.e. `s`
/// pins down the value of phi.
bool is_support(const PointFunctional& phi, const PointSet& s);

struct SupportReport {
  std::vector<PointSet> minimal_supports;  // canonical (cardinality, mask) order
  bool is_singleton_minimum = false;
};

/// Exhaustive ground truth: scans every subset of X in canonical order and
/// returns the inclusion-minimal supports. is_singleton_minimum holds when
/// exactly one size-1 minimal support exists and every support contains it.
/// Throws DecomposeError(NullFunctional) on the null functional.
SupportReport minimal_supports_oracle(const PointFunctional& phi);

/// h(y) = the unique x whose singleton is a support of delta_y . H, for each
/// target point y. Throws DecomposeError with code NotSeparating,
/// NullFunctional(y), or SupportAmbiguous(y, candidates) — the last when zero
/// or several singleton supports exist, which signals a violated hypothesis.
std::vector<int> support_map(const CodeHom& hom);

/// The weight at y: on the evaluation image G_{h(y)} of the source, maps
/// g = f(h(y)) to Hf(y), verifying all choices of f agree. Endomorphism when
/// the domain is all of G, automorphism when additionally bijective.
/// Throws DecomposeError(WeightIllDefined) when choices conflict, i.e. when
/// `support[y]` is not a genuine support point.
GroupMap weight_at(const CodeHom& hom, const std::vector<int>& support, int y);

/// The decomposition of the inverse map, plus the two mutual-inverse checks
/// the representation theorem promises.
struct InverseConsistency {
  std::vector<int> support_map;    // k : X -> Y
  std::vector<GroupMap> weights;   // rho, per x
  bool support_maps_invert = false;  // k . h = id_Y and h . k = id_X
  bool weights_invert = false;       // rho[h(y)] . omega[y] = id = omega[y] . rho[h(y)]
};

/// A separating homomorphism written as Hf(y) = omega[y](f(h(y))).
struct Decomposition {
  CodeHom hom;
  std::vector<int> support_map;   // h : Y -> X
  std::vector<GroupMap> weights;  // omega, per y
  BiseparatingVerdict biseparating;
  HypothesisReport source_hypotheses;
  HypothesisReport target_hypotheses;
  /// Present when the hom is biseparating and both codes pass all three
  /// hypotheses (the regime where weights are automorphisms and h inverts).
  std::optional<InverseConsistency> inverse;

  bool support_map_is_bijective() const;
  bool all_weights_automorphisms() const;
};

/// Runs support_map and weight_at over every target point, verifies the
/// representation identity on every (f, y) (a failure throws
/// RepresentationFailed and indicates an internal inconsistency), computes
/// the hypothesis verdicts for both codes, and — in the biseparating,
/// all-hypotheses regime — decomposes the inverse and records the
/// mutual-inverse checks.
Decomposition decompose(const CodeHom& hom, std::size_t closure_cap = kDefaultClosureCap);

struct EquivalenceResult {
  std::optional<Decomposition> certificate;
  std::string failure_reason;  // stable token when not equivalent

  bool equivalent() const { return certificate.has_value(); }
};

/// Searches all bijections h: Y -> X (lexicographic image tuples) and all
/// per-point automorphism assignments (lexicographic index tuples, inner
/// loop) for a weighted composition carrying A onto B; returns the first
/// match. Branches are pruned only when provably fruitless, so the returned
/// certificate is the unpruned-order first witness. Throws SearchBudgetError
/// when |Y|! * |Aut(G)|^|Y| exceeds `search_cap`, and PreconditionError when
/// the codes are over different groups.
EquivalenceResult decide_equivalence(const FunctionGroup& a, const FunctionGroup& b,
                                     std::uint64_t search_cap = kDefaultSearchCap,
                                     std::size_t closure_cap = kDefaultClosureCap);

enum class CheckStatus { Pass, Fail, Skipped };

struct PropertyCheck {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;  // first witness on failure, reason when skipped
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;

  bool all_passed() const;
  const PropertyCheck* find(const std::string& name) const;
};

/// Exhaustive per-instance audit of the support machinery:
///   full_space_is_support, supports_nonempty, supports_upward_closed,
///   support_restriction_determines_value,
///   supports_pairwise_intersect      (needs source controllable + separating),
///   zero_subset_preimage             (S <= Z(f) implies h^-1(S) <= Z(Hf)),
///   support_map_shrinks_cozero       (h(coz(Hf)) <= coz(f)),
///   injective_implies_onto_support_map (needs injective H).
/// Gated checks report Skipped when their hypothesis fails. Requires a
/// separating hom whose support map exists (throws DecomposeError otherwise).
PropertyReport check_support_properties(const CodeHom& hom,
                                        std::size_t closure_cap = kDefaultClosureCap);

/// Inverse of an automorphism (total bijective map).
GroupMap inverse_automorphism(const FiniteGroup& g, const GroupMap& m);

}  // namespace sepcomp
