#include "sepcomp/code.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

namespace sepcomp {

GFunction constant_function(int n_points, int element) {
  return GFunction{std::vector<int>(static_cast<std::size_t>(n_points), element)};
}

GFunction pointwise_mul(const FiniteGroup& g, const GFunction& a, const GFunction& b) {
  GFunction out;
  out.values.reserve(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i)
    out.values.push_back(g.mul(a.values[i], b.values[i]));
  return out;
}

GFunction pointwise_inv(const FiniteGroup& g, const GFunction& a) {
  GFunction out;
  out.values.reserve(a.values.size());
  for (int v : a.values) out.values.push_back(g.inv(v));
  return out;
}

PointSet zero_set(const FiniteGroup& g, const GFunction& f) {
  std::uint32_t mask = 0;
  for (int i = 0; i < f.size(); ++i) {
    if (f.value_at(i) == g.identity()) mask |= std::uint32_t{1} << i;
  }
  return PointSet(f.size(), mask);
}

PointSet cozero_set(const FiniteGroup& g, const GFunction& f) {
  return zero_set(g, f).complement();
}

namespace {

// 5 bits per point; fits 64 bits under the kMaxPoints/kMaxGroupOrder limits.
std::uint64_t encode_key(const GFunction& f) {
  std::uint64_t key = 0;
  for (int i = 0; i < f.size(); ++i)
    key |= static_cast<std::uint64_t>(f.value_at(i)) << (5 * i);
  return key;
}

}  // namespace

FunctionGroup FunctionGroup::generate(SpacePtr space, GroupPtr group,
                                      std::vector<GFunction> generators, std::size_t cap) {
  if (!space || !group) throw InputError("generate requires a space and a group");
  auto data = std::make_shared<Data>();
  data->space = std::move(space);
  data->group = std::move(group);
  const FiniteGroup& g = *data->group;
  const int n_points = data->space->size();

  for (const auto& f : generators) {
    if (f.size() != n_points) throw InputError("generator has wrong number of values");
    for (int v : f.values) {
      if (v < 0 || v >= g.order()) throw InputError("generator value out of range");
    }
  }
  data->generators = std::move(generators);

  std::unordered_map<std::uint64_t, int> index;
  auto push = [&](const GFunction& f, const Derivation& d) {
    if (data->elements.size() >= cap)
      throw SizeOverflowError(cap, data->elements.size());
    index.emplace(encode_key(f), static_cast<int>(data->elements.size()));
    data->elements.push_back(f);
    data->derivations.push_back(d);
  };

  if (data->generators.empty()) {
    push(constant_function(n_points, g.identity()), Derivation{});
  } else {
    for (std::size_t i = 0; i < data->generators.size(); ++i) {
      const GFunction& f = data->generators[i];
      if (!index.count(encode_key(f)))
        push(f, Derivation{static_cast<int>(i), -1, -1});
    }
    // Breadth-first closure: each wave collects the unseen products with at
    // least one factor from the previous wave, sorted by value tuple.
    std::size_t fresh_begin = 0;
    while (fresh_begin < data->elements.size()) {
      std::size_t fresh_end = data->elements.size();
      std::map<GFunction, Derivation> wave;
      auto offer = [&](int li, int ri) {
        GFunction p = pointwise_mul(g, data->elements[static_cast<std::size_t>(li)],
                                    data->elements[static_cast<std::size_t>(ri)]);
        if (index.count(encode_key(p))) return;
        wave.emplace(std::move(p), Derivation{-1, li, ri});
      };
      for (std::size_t u = fresh_begin; u < fresh_end; ++u) {
        for (std::size_t v = 0; v < fresh_end; ++v) {
          offer(static_cast<int>(u), static_cast<int>(v));
          offer(static_cast<int>(v), static_cast<int>(u));
        }
      }
      for (auto& [f, d] : wave) push(f, d);
      fresh_begin = fresh_end;
    }
  }

  const int size = static_cast<int>(data->elements.size());
  data->zero_masks.reserve(data->elements.size());
  data->keys.reserve(data->elements.size());
  for (const auto& f : data->elements) {
    data->zero_masks.push_back(zero_set(g, f).mask());
    data->keys.push_back(encode_key(f));
  }
  data->sorted_order.resize(data->elements.size());
  for (int i = 0; i < size; ++i) data->sorted_order[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
  std::sort(data->sorted_order.begin(), data->sorted_order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return data->keys[a] < data->keys[b]; });
  data->identity_index = -1;
  std::uint64_t id_key = encode_key(constant_function(n_points, g.identity()));
  for (int i = 0; i < size; ++i) {
    if (data->keys[static_cast<std::size_t>(i)] == id_key) {
      data->identity_index = i;
      break;
    }
  }

  return FunctionGroup(std::move(data));
}

int FunctionGroup::index_of(const GFunction& f) const {
  if (f.size() != space().size()) return -1;
  for (int v : f.values) {
    if (v < 0 || v >= group().order()) return -1;
  }
  std::uint64_t key = encode_key(f);
  auto it = std::lower_bound(d_->sorted_order.begin(), d_->sorted_order.end(), key,
                             [&](std::uint32_t i, std::uint64_t k) { return d_->keys[i] < k; });
  if (it == d_->sorted_order.end() || d_->keys[*it] != key) return -1;
  return static_cast<int>(*it);
}

int FunctionGroup::product_index(int i, int j) const {
  return index_of(pointwise_mul(group(), element(i), element(j)));
}

int FunctionGroup::inverse_index(int i) const {
  return index_of(pointwise_inv(group(), element(i)));
}

bool FunctionGroup::same_universe(const FunctionGroup& other) const {
  return space() == other.space() && group() == other.group();
}

bool FunctionGroup::same_elements(const FunctionGroup& other) const {
  if (!same_universe(other) || size() != other.size()) return false;
  for (const auto& f : elements()) {
    if (!other.contains(f)) return false;
  }
  return true;
}

Subgroup evaluation_image(const FunctionGroup& code, int point) {
  if (point < 0 || point >= code.space().size()) throw InputError("point index out of range");
  std::uint64_t seen = 0;
  for (const auto& f : code.elements()) seen |= std::uint64_t{1} << f.value_at(point);
  std::vector<int> members;
  for (int v = 0; v < code.group().order(); ++v) {
    if ((seen >> v) & 1u) members.push_back(v);
  }
  return Subgroup(std::move(members), code.group().order());
}

SetFamily zero_family(const FunctionGroup& code) {
  std::vector<std::uint32_t> masks;
  masks.reserve(static_cast<std::size_t>(code.size()));
  for (int i = 0; i < code.size(); ++i) masks.push_back(code.zero_mask(i));
  return SetFamily(code.space().size(), std::move(masks));
}

SetFamily cozero_family(const FunctionGroup& code) {
  std::vector<std::uint32_t> masks;
  masks.reserve(static_cast<std::size_t>(code.size()));
  for (int i = 0; i < code.size(); ++i) masks.push_back(code.cozero_mask(i));
  return SetFamily(code.space().size(), std::move(masks));
}

SeparationVerdict separates_points(const FunctionGroup& code) {
  const int n = code.space().size();
  for (int x1 = 0; x1 < n; ++x1) {
    for (int x2 = 0; x2 < n; ++x2) {
      if (x1 == x2) continue;
      bool found = false;
      for (int i = 0; i < code.size() && !found; ++i) {
        const GFunction& f = code.element(i);
        found = f.value_at(x1) != code.group().identity() &&
                f.value_at(x2) == code.group().identity();
      }
      if (!found) return {false, PointPairWitness{x1, x2}};
    }
  }
  return {true, std::nullopt};
}

SeparationVerdict strongly_separates_points(const FunctionGroup& code) {
  const int n = code.space().size();
  for (int x1 = 0; x1 < n; ++x1) {
    for (int x2 = x1 + 1; x2 < n; ++x2) {
      bool found = false;
      for (int i = 0; i < code.size() && !found; ++i) {
        std::uint32_t coz1 = code.cozero_mask(i);
        if (!((coz1 >> x1) & 1u)) continue;
        for (int j = 0; j < code.size() && !found; ++j) {
          std::uint32_t coz2 = code.cozero_mask(j);
          found = ((coz2 >> x2) & 1u) && (coz1 & coz2) == 0;
        }
      }
      if (!found) return {false, PointPairWitness{x1, x2}};
    }
  }
  return {true, std::nullopt};
}

DensityVerdict pointwise_dense(const FunctionGroup& code) {
  for (int x = 0; x < code.space().size(); ++x) {
    if (evaluation_image(code, x).size() != code.group().order()) return {false, x};
  }
  return {true, std::nullopt};
}

ControllabilityVerdict controllable(const FunctionGroup& code, std::size_t closure_cap) {
  const FiniteGroup& g = code.group();
  const std::uint32_t full = code.space().full_mask();
  SetFamily sigma_z = sigma_closure(zero_family(code), closure_cap);
  SetFamily sigma_coz = sigma_closure(cozero_family(code), closure_cap);

  auto admissible = [&](int f_idx, std::uint32_t d1, std::uint32_t u, int g_idx) {
    // g = f on D1, and g = e on Z(f) and outside U.
    const GFunction& f = code.element(f_idx);
    const GFunction& cand = code.element(g_idx);
    std::uint32_t must_vanish = code.zero_mask(f_idx) | (full & ~u);
    if (must_vanish & ~code.zero_mask(g_idx)) return false;
    for (int x = 0; x < f.size(); ++x) {
      if (((d1 >> x) & 1u) && cand.value_at(x) != f.value_at(x)) return false;
    }
    return true;
  };

  for (int f_idx = 0; f_idx < code.size(); ++f_idx) {
    const GFunction& f = code.element(f_idx);
    for (std::uint32_t d1 : sigma_z.masks()) {
      // Happy path shared by all (D2): g agreeing with f on D1 and silent
      // elsewhere, enveloped by U = D1 itself. Existence only; the witness
      // scan below stays exhaustive.
      bool patch_works = false;
      if (sigma_coz.contains(d1)) {
        GFunction patch = constant_function(f.size(), g.identity());
        for (int x = 0; x < f.size(); ++x) {
          if ((d1 >> x) & 1u) patch.values[static_cast<std::size_t>(x)] = f.value_at(x);
        }
        patch_works = code.contains(patch);
      }
      for (std::uint32_t d2 : sigma_z.masks()) {
        if (d1 & d2) continue;
        if (patch_works) continue;
        bool found = false;
        for (std::uint32_t u : sigma_coz.masks()) {
          if (d1 & ~u) continue;
          if (u & d2) continue;
          for (int g_idx = 0; g_idx < code.size() && !found; ++g_idx)
            found = admissible(f_idx, d1, u, g_idx);
          if (found) break;
        }
        if (!found)
          return {false, ControllabilityWitness{f_idx, d1, d2}};
      }
    }
  }
  return {true, std::nullopt};
}

HypothesisReport check_hypotheses(const FunctionGroup& code, std::size_t closure_cap) {
  return HypothesisReport{separates_points(code), pointwise_dense(code),
                          controllable(code, closure_cap)};
}

FunctionGroup full_code(SpacePtr space, GroupPtr group, std::size_t cap) {
  std::vector<GFunction> gens;
  const int n = space->size();
  for (int x = 0; x < n; ++x) {
    for (int v = 0; v < group->order(); ++v) {
      if (v == group->identity()) continue;
      GFunction f = constant_function(n, group->identity());
      f.values[static_cast<std::size_t>(x)] = v;
      gens.push_back(std::move(f));
    }
  }
  return FunctionGroup::generate(std::move(space), std::move(group), std::move(gens), cap);
}

}  // namespace sepcomp
