#include "sepcomp/space.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace sepcomp {

PointSpace::PointSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InputError("point space needs at least one point");
  if (static_cast<int>(labels_.size()) > kMaxPoints)
    throw InputError("point space size " + std::to_string(labels_.size()) + " exceeds limit " +
                     std::to_string(kMaxPoints));
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw InputError("point labels must be distinct");
}

int PointSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

PointSet::PointSet(int n_points, std::uint32_t mask) : n_points_(n_points), mask_(mask) {
  if (n_points < 0 || n_points > kMaxPoints) throw InputError("point set size out of range");
  if (mask >> n_points) throw InputError("point set mask exceeds its space");
}

int PointSet::cardinality() const { return std::popcount(mask_); }

std::vector<int> PointSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < n_points_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

bool set_order_less(std::uint32_t a, std::uint32_t b) {
  int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  return a < b;
}

SetFamily::SetFamily(int n_points, std::vector<std::uint32_t> masks)
    : n_points_(n_points), masks_(std::move(masks)) {
  if (n_points < 1 || n_points > kMaxPoints) throw InputError("set family space size out of range");
  const std::uint32_t full = (std::uint32_t{1} << n_points) - 1;
  for (std::uint32_t m : masks_) {
    if (m & ~full) throw InputError("set family member exceeds its space");
  }
  std::sort(masks_.begin(), masks_.end(), set_order_less);
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

bool SetFamily::contains(std::uint32_t mask) const {
  return std::binary_search(masks_.begin(), masks_.end(), mask, set_order_less);
}

SetFamily sigma_closure(const SetFamily& family, std::size_t cap) {
  std::set<std::uint32_t> have(family.masks().begin(), family.masks().end());
  if (have.size() > cap) throw ClosureOverflowError(cap, have.size());

  std::vector<std::uint32_t> all(have.begin(), have.end());
  std::vector<std::uint32_t> fresh = all;
  while (!fresh.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t a : fresh) {
      for (std::uint32_t b : all) {
        for (std::uint32_t c : {a | b, a & b}) {
          if (have.insert(c).second) {
            if (have.size() > cap) throw ClosureOverflowError(cap, have.size() - 1);
            next.push_back(c);
          }
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    fresh = std::move(next);
  }
  return SetFamily(family.space_size(), std::move(all));
}

std::optional<std::pair<PointSet, PointSet>> separate_disjoint(const PointSet& a,
                                                               const PointSet& b,
                                                               const SetFamily& family,
                                                               std::size_t cap) {
  if (a.space_size() != b.space_size() || a.space_size() != family.space_size())
    throw InputError("separate_disjoint arguments must share one space");
  if (a.is_empty() || b.is_empty())
    throw PreconditionError("separate_disjoint requires nonempty sets");
  if (a.intersects(b)) throw PreconditionError("separate_disjoint requires disjoint sets");

  SetFamily closed = sigma_closure(family, cap);
  for (std::uint32_t da : closed.masks()) {
    if (a.mask() & ~da) continue;
    for (std::uint32_t db : closed.masks()) {
      if (b.mask() & ~db) continue;
      if (da & db) continue;
      return std::make_pair(PointSet(a.space_size(), da), PointSet(a.space_size(), db));
    }
  }
  return std::nullopt;
}

}  // namespace sepcomp
