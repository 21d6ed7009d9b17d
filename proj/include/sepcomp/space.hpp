#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepcomp/group.hpp"

namespace sepcomp {

inline constexpr std::size_t kDefaultClosureCap = 4096;

/// A finite set of labeled points. Point i is identified with its position
/// in the label list.
class PointSpace {
 public:
  explicit PointSpace(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;
  std::uint32_t full_mask() const { return (std::uint32_t{1} << size()) - 1; }

  bool operator==(const PointSpace& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
};

using SpacePtr = std::shared_ptr<const PointSpace>;

/// A subset of a point space, as a bitmask (point i is bit i).
class PointSet {
 public:
  PointSet() = default;
  PointSet(int n_points, std::uint32_t mask);

  static PointSet empty(int n_points) { return PointSet(n_points, 0); }
  static PointSet full(int n_points) {
    return PointSet(n_points, (std::uint32_t{1} << n_points) - 1);
  }
  static PointSet singleton(int n_points, int i) {
    return PointSet(n_points, std::uint32_t{1} << i);
  }

  int space_size() const { return n_points_; }
  std::uint32_t mask() const { return mask_; }
  int cardinality() const;
  bool is_empty() const { return mask_ == 0; }
  bool contains(int i) const { return (mask_ >> i) & 1u; }
  bool is_subset_of(const PointSet& other) const { return (mask_ & ~other.mask_) == 0; }
  bool intersects(const PointSet& other) const { return (mask_ & other.mask_) != 0; }
  PointSet complement() const {
    return PointSet(n_points_, ~mask_ & ((std::uint32_t{1} << n_points_) - 1));
  }
  PointSet set_union(const PointSet& other) const { return PointSet(n_points_, mask_ | other.mask_); }
  PointSet set_intersection(const PointSet& other) const {
    return PointSet(n_points_, mask_ & other.mask_);
  }
  std::vector<int> members() const;

  bool operator==(const PointSet& other) const {
    return n_points_ == other.n_points_ && mask_ == other.mask_;
  }

 private:
  int n_points_ = 0;
  std::uint32_t mask_ = 0;
};

/// Canonical order for subsets of one space: ascending cardinality, ties by
/// ascending mask value. Every deterministic family/witness scan uses it.
bool set_order_less(std::uint32_t a, std::uint32_t b);

/// A family of distinct subsets of one space, kept sorted in canonical order.
class SetFamily {
 public:
  SetFamily(int n_points, std::vector<std::uint32_t> masks);

  int space_size() const { return n_points_; }
  std::size_t size() const { return masks_.size(); }
  const std::vector<std::uint32_t>& masks() const { return masks_; }
  PointSet set(std::size_t i) const { return PointSet(n_points_, masks_[i]); }
  bool contains(std::uint32_t mask) const;

  bool operator==(const SetFamily& other) const {
    return n_points_ == other.n_points_ && masks_ == other.masks_;
  }

 private:
  int n_points_ = 0;
  std::vector<std::uint32_t> masks_;
};

/// Smallest family containing `family` that is closed under binary union and
/// binary intersection, by fixpoint iteration. The empty set and the full
/// space are not injected; they appear only if generated (or already present).
/// Throws ClosureOverflowError when the closure would exceed `cap`.
SetFamily sigma_closure(const SetFamily& family, std::size_t cap = kDefaultClosureCap);

/// First pair (D_A, D_B) in the canonical order of sigma_closure(family) with
/// A inside D_A, B inside D_B and D_A, D_B disjoint (D_A scanned in the outer
/// loop). nullopt when no such pair exists, i.e. the family fails to separate.
/// Throws InputError when A, B overlap or one of them is empty.
std::optional<std::pair<PointSet, PointSet>> separate_disjoint(
    const PointSet& a, const PointSet& b, const SetFamily& family,
    std::size_t cap = kDefaultClosureCap);

}  // namespace sepcomp
