#include "sepcomp/group.hpp"

#include <algorithm>
#include <set>

namespace sepcomp {

int FiniteGroup::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

FiniteGroup validate_group(std::vector<std::string> labels,
                           const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw InputError("group needs at least one element");
  if (n > kMaxGroupOrder)
    throw InputError("group order " + std::to_string(n) + " exceeds limit " +
                     std::to_string(kMaxGroupOrder));
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != n) throw InputError("group labels must be distinct");
  }
  if (static_cast<int>(table.size()) != n)
    throw InputError("table must have one row per element");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw InputError("table rows must have one entry per element");
  }

  // Closure: every entry names an element.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (table[i][j] < 0 || table[i][j] >= n) {
        throw GroupError("NotClosed",
                         "table entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") is not an element index",
                         {i, j});
      }
    }
  }

  // Two-sided identity.
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw GroupError("NoIdentity", "no two-sided identity element", {});

  // Associativity over all triples.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (table[table[i][j]][k] != table[i][table[j][k]]) {
          throw GroupError("NotAssociative",
                           "(" + labels[i] + "*" + labels[j] + ")*" + labels[k] +
                               " != " + labels[i] + "*(" + labels[j] + "*" + labels[k] + ")",
                           {i, j, k});
        }
      }
    }
  }

  // Two-sided inverses.
  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (table[i][j] == identity && table[j][i] == identity) {
        inverse[static_cast<std::size_t>(i)] = j;
        break;
      }
    }
    if (inverse[static_cast<std::size_t>(i)] < 0) {
      throw GroupError("MissingInverse", "element " + labels[i] + " has no inverse", {i});
    }
  }

  FiniteGroup g;
  g.labels_ = std::move(labels);
  g.table_.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table_.push_back(table[i][j]);
  g.inverse_ = std::move(inverse);
  g.identity_ = identity;
  return g;
}

GroupPtr make_group(std::vector<std::string> labels, const std::vector<std::vector<int>>& table) {
  return std::make_shared<const FiniteGroup>(validate_group(std::move(labels), table));
}

Subgroup::Subgroup(std::vector<int> members, int ambient_order) : members_(std::move(members)) {
  for (int m : members_) {
    if (m < 0 || m >= ambient_order) throw InputError("subgroup member index out of range");
    mask_ |= std::uint64_t{1} << m;
  }
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& seeds) {
  std::vector<int> members;
  std::uint64_t seen = 0;
  for (int s : seeds) {
    if (s < 0 || s >= g.order()) throw InputError("seed index out of range");
    if (!((seen >> s) & 1u)) {
      seen |= std::uint64_t{1} << s;
      members.push_back(s);
    }
  }
  if (members.empty()) {
    members.push_back(g.identity());
    return Subgroup(members, g.order());
  }

  for (;;) {
    std::vector<int> wave;
    for (int a : members) {
      for (int b : members) {
        int p = g.mul(a, b);
        if (!((seen >> p) & 1u)) {
          seen |= std::uint64_t{1} << p;
          wave.push_back(p);
        }
      }
    }
    if (wave.empty()) break;
    std::sort(wave.begin(), wave.end());
    members.insert(members.end(), wave.begin(), wave.end());
  }
  return Subgroup(members, g.order());
}

namespace {

// Homomorphism law over the defined part of `table`.
bool partial_map_consistent(const FiniteGroup& g, const std::vector<int>& table) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    if (table[static_cast<std::size_t>(a)] < 0) continue;
    for (int b = 0; b < n; ++b) {
      if (table[static_cast<std::size_t>(b)] < 0) continue;
      int ab = g.mul(a, b);
      int img = table[static_cast<std::size_t>(ab)];
      if (img < 0) continue;
      if (img != g.mul(table[static_cast<std::size_t>(a)], table[static_cast<std::size_t>(b)]))
        return false;
    }
  }
  return true;
}

bool is_bijection(const std::vector<int>& images, int n) {
  std::uint64_t hit = 0;
  for (int v : images) hit |= std::uint64_t{1} << v;
  int count = 0;
  for (int i = 0; i < n; ++i) count += static_cast<int>((hit >> i) & 1u);
  return count == n;
}

}  // namespace

GroupMap GroupMap::total(const FiniteGroup& g, std::vector<int> images) {
  const int n = g.order();
  if (static_cast<int>(images.size()) != n) throw InputError("image tuple has wrong length");
  for (int v : images) {
    if (v < 0 || v >= n) throw InputError("image index out of range");
  }
  if (!partial_map_consistent(g, images)) throw InputError("image tuple is not a homomorphism");
  GroupMap m;
  m.domain_size_ = n;
  m.kind_ = is_bijection(images, n) ? MapKind::Automorphism : MapKind::Endomorphism;
  m.table_ = std::move(images);
  return m;
}

GroupMap GroupMap::partial(const FiniteGroup& g, const Subgroup& domain,
                           const std::vector<int>& images) {
  if (images.size() != domain.members().size())
    throw InputError("one image per domain member required");
  std::vector<int> table(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 0 || v >= g.order()) throw InputError("image index out of range");
    table[static_cast<std::size_t>(domain.members()[i])] = v;
  }
  if (!partial_map_consistent(g, table))
    throw InputError("images are not a homomorphism on the domain");
  GroupMap m;
  m.domain_size_ = domain.size();
  if (domain.size() == g.order()) {
    m.kind_ = is_bijection(table, g.order()) ? MapKind::Automorphism : MapKind::Endomorphism;
  } else {
    m.kind_ = MapKind::PartialHom;
  }
  m.table_ = std::move(table);
  return m;
}

std::vector<int> GroupMap::domain_members() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

GroupMap compose(const FiniteGroup& g, const GroupMap& outer, const GroupMap& inner) {
  std::vector<int> table(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> members;
  for (int a = 0; a < g.order(); ++a) {
    if (!inner.defined_at(a)) continue;
    int mid = inner.apply(a);
    if (!outer.defined_at(mid))
      throw InputError("composition undefined: inner image escapes outer domain");
    table[static_cast<std::size_t>(a)] = outer.apply(mid);
    members.push_back(a);
  }
  if (static_cast<int>(members.size()) == g.order()) return GroupMap::total(g, std::move(table));
  std::vector<int> images;
  for (int a : members) images.push_back(table[static_cast<std::size_t>(a)]);
  return GroupMap::partial(g, Subgroup(members, g.order()), images);
}

std::vector<GroupMap> enumerate_endomorphisms(const FiniteGroup& g) {
  const int n = g.order();
  if (n > kMaxEnumerationOrder)
    throw InputError("endomorphism enumeration limited to order " +
                     std::to_string(kMaxEnumerationOrder));

  std::vector<GroupMap> out;
  std::vector<int> images(static_cast<std::size_t>(n), -1);

  // Assign images[0..k] left to right, trying candidate values in increasing
  // order; complete tuples therefore appear in lexicographic order, exactly
  // as a full |G|^|G| scan would emit them.
  auto consistent_at = [&](int k) {
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) {
        int t = g.mul(i, j);
        if (t > k) continue;
        if (images[static_cast<std::size_t>(t)] !=
            g.mul(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]))
          return false;
      }
    }
    return true;
  };

  int pos = 0;
  while (pos >= 0) {
    int next = images[static_cast<std::size_t>(pos)] + 1;
    if (next >= n) {
      images[static_cast<std::size_t>(pos)] = -1;
      --pos;
      continue;
    }
    images[static_cast<std::size_t>(pos)] = next;
    if (!consistent_at(pos)) continue;
    if (pos == n - 1) {
      out.push_back(GroupMap::total(g, images));
    } else {
      ++pos;
    }
  }
  return out;
}

std::vector<GroupMap> enumerate_automorphisms(const FiniteGroup& g) {
  std::vector<GroupMap> out;
  for (auto& m : enumerate_endomorphisms(g)) {
    if (m.kind() == MapKind::Automorphism) out.push_back(std::move(m));
  }
  return out;
}

GroupMap identity_map(const FiniteGroup& g) {
  std::vector<int> images(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) images[static_cast<std::size_t>(i)] = i;
  return GroupMap::total(g, std::move(images));
}

}  // namespace sepcomp
