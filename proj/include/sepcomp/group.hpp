#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sepcomp/errors.hpp"

namespace sepcomp {

// Desk-scale limits. Group axioms are checked exhaustively (cubic in the
// order) and End/Aut enumeration backtracks over image tuples, so both
// bounds stay small. Point spaces are bitmask sets, and 12 points matches
// the default closure cap 4096 = 2^12.
inline constexpr int kMaxGroupOrder = 32;
inline constexpr int kMaxEnumerationOrder = 16;
inline constexpr int kMaxPoints = 12;

/// A finite group presented by its full multiplication table.
/// Element i is identified with its position in the label list;
/// construct through validate_group(), which checks every axiom.
class FiniteGroup {
 public:
  int order() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int g) const { return labels_[static_cast<std::size_t>(g)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * labels_.size() + b]; }
  int inv(int g) const { return inverse_[static_cast<std::size_t>(g)]; }
  int identity() const { return identity_; }

  /// Index of `label`, or -1 when absent.
  int index_of(const std::string& label) const;

  /// Structural equality: same labels in the same order, same table.
  bool operator==(const FiniteGroup& other) const {
    return labels_ == other.labels_ && table_ == other.table_;
  }

 private:
  friend FiniteGroup validate_group(std::vector<std::string> labels,
                                    const std::vector<std::vector<int>>& table);

  FiniteGroup() = default;

  std::vector<std::string> labels_;
  std::vector<int> table_;  // row-major, table_[a * order + b] = a*b
  std::vector<int> inverse_;
  int identity_ = -1;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Builds a FiniteGroup from labels and a square table of element indices,
/// verifying closure, the existence of a two-sided identity, associativity
/// over all triples, and two-sided inverses. Throws GroupError naming the
/// offending indices, or InputError for shape problems.
FiniteGroup validate_group(std::vector<std::string> labels,
                           const std::vector<std::vector<int>>& table);

/// Convenience: validate and wrap in a shared pointer.
GroupPtr make_group(std::vector<std::string> labels, const std::vector<std::vector<int>>& table);

/// A subgroup of an ambient group, stored as member indices plus a bitmask.
/// Member order is deterministic (see subgroup_closure / evaluation_image).
class Subgroup {
 public:
  Subgroup(std::vector<int> members, int ambient_order);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(int g) const { return (mask_ >> g) & 1u; }
  std::uint64_t member_mask() const { return mask_; }
  bool is_full(const FiniteGroup& g) const { return size() == g.order(); }

  bool operator==(const Subgroup& other) const { return mask_ == other.mask_; }

 private:
  std::vector<int> members_;
  std::uint64_t mask_ = 0;
};

/// Smallest subgroup of `g` containing `seeds`: breadth-first closure from
/// the seeds in input order, each wave of new elements sorted by index.
/// Empty seeds yield the trivial subgroup {e}.
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& seeds);

enum class MapKind { PartialHom, Endomorphism, Automorphism };

/// A homomorphism into G defined on all of G (endomorphism/automorphism) or
/// on a subgroup of it (partial homomorphism, the shape weight maps take).
/// Lookup is by ambient element index; apply() returns -1 outside the domain.
class GroupMap {
 public:
  /// Total map G -> G from an image tuple; verifies the homomorphism law and
  /// classifies Endomorphism vs Automorphism.
  static GroupMap total(const FiniteGroup& g, std::vector<int> images);

  /// Map defined on `domain` only; `images` pairs with domain.members().
  /// Verifies the homomorphism law on the domain. Kind is PartialHom unless
  /// the domain is all of G.
  static GroupMap partial(const FiniteGroup& g, const Subgroup& domain, const std::vector<int>& images);

  MapKind kind() const { return kind_; }
  bool defined_at(int g) const { return table_[static_cast<std::size_t>(g)] >= 0; }
  int apply(int g) const { return table_[static_cast<std::size_t>(g)]; }
  int domain_size() const { return domain_size_; }

  /// Domain element indices in ascending order.
  std::vector<int> domain_members() const;

  bool operator==(const GroupMap& other) const {
    return table_ == other.table_ && kind_ == other.kind_;
  }

 private:
  GroupMap() = default;

  std::vector<int> table_;  // ambient index -> image index, -1 outside domain
  int domain_size_ = 0;
  MapKind kind_ = MapKind::PartialHom;
};

/// outer(inner(.)) on inner's domain; requires inner's values to lie in
/// outer's domain.
GroupMap compose(const FiniteGroup& g, const GroupMap& outer, const GroupMap& inner);

/// All endomorphisms of `g`, ordered lexicographically by image tuple.
/// Backtracking over partial image tuples with consistency pruning; the
/// emitted set and order equal the plain |G|^|G| scan. Requires
/// order <= kMaxEnumerationOrder.
std::vector<GroupMap> enumerate_endomorphisms(const FiniteGroup& g);

/// The bijective members of enumerate_endomorphisms, same relative order.
std::vector<GroupMap> enumerate_automorphisms(const FiniteGroup& g);

/// Identity automorphism.
GroupMap identity_map(const FiniteGroup& g);

}  // namespace sepcomp
