#include "sepcomp/represent.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "sepcomp/format.hpp"

namespace sepcomp {

bool is_support(const PointFunctional& phi, const PointSet& s) {
  const FunctionGroup& a = phi.source();
  if (s.space_size() != a.space().size())
    throw InputError("support candidate lives on the wrong space");
  const int e = a.group().identity();
  for (int i = 0; i < a.size(); ++i) {
    if (s.mask() & ~a.zero_mask(i)) continue;  // f does not vanish on all of s
    if (phi.value(i) != e) return false;
  }
  return true;
}

SupportReport minimal_supports_oracle(const PointFunctional& phi) {
  if (phi.is_null())
    throw DecomposeError("NullFunctional", "the functional is null; supports are meaningless");
  const int n = phi.source().space().size();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;

  std::vector<char> supp(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t m = 0; m <= full; ++m)
    supp[m] = is_support(phi, PointSet(n, m)) ? 1 : 0;

  std::vector<std::uint32_t> order(static_cast<std::size_t>(full) + 1);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), set_order_less);

  SupportReport report;
  for (std::uint32_t m : order) {
    if (!supp[m]) continue;
    bool minimal = true;
    for (std::uint32_t s = (m - 1) & m; minimal; s = (s - 1) & m) {
      if (s != m && supp[s]) minimal = false;
      if (s == 0) break;
    }
    if (minimal) report.minimal_supports.emplace_back(n, m);
  }

  int singleton = -1;
  int singleton_count = 0;
  for (const PointSet& s : report.minimal_supports) {
    if (s.cardinality() == 1) {
      ++singleton_count;
      singleton = s.members().front();
    }
  }
  if (singleton_count == 1) {
    bool all_contain = true;
    for (std::uint32_t m = 0; m <= full && all_contain; ++m) {
      if (supp[m]) all_contain = ((m >> singleton) & 1u) != 0;
    }
    report.is_singleton_minimum = all_contain;
  }
  return report;
}

std::vector<int> support_map(const CodeHom& hom) {
  SeparatingVerdict sep = is_separating(hom);
  if (!sep.holds) {
    const FunctionGroup& a = hom.source();
    throw DecomposeError("NotSeparating",
                         "hom is not separating; witness pair " +
                             format_function(a.group(), a.element(sep.witness->f)) + ", " +
                             format_function(a.group(), a.element(sep.witness->g)));
  }
  const PointSpace& target_space = hom.target().space();
  const int nx = hom.source().space().size();
  std::vector<int> h;
  h.reserve(static_cast<std::size_t>(target_space.size()));
  for (int y = 0; y < target_space.size(); ++y) {
    PointFunctional phi = point_functional(hom, y);
    if (phi.is_null())
      throw DecomposeError("NullFunctional",
                           "delta at " + target_space.label(y) + " composed with the hom is null",
                           y);
    std::vector<int> candidates;
    for (int x = 0; x < nx; ++x) {
      if (is_support(phi, PointSet::singleton(nx, x))) candidates.push_back(x);
    }
    if (candidates.size() != 1) {
      std::string detail = "point " + target_space.label(y) + " has " +
                           std::to_string(candidates.size()) + " singleton supports";
      throw DecomposeError("SupportAmbiguous", detail, y, candidates);
    }
    h.push_back(candidates.front());
  }
  return h;
}

GroupMap weight_at(const CodeHom& hom, const std::vector<int>& support, int y) {
  const FunctionGroup& a = hom.source();
  const FiniteGroup& g = a.group();
  if (y < 0 || y >= static_cast<int>(support.size())) throw InputError("point index out of range");
  const int x = support[static_cast<std::size_t>(y)];
  if (x < 0 || x >= a.space().size()) throw InputError("support point out of range");

  Subgroup domain = evaluation_image(a, x);
  std::vector<int> images;
  images.reserve(domain.members().size());
  for (int value : domain.members()) {
    int img = -1;
    for (int i = 0; i < a.size(); ++i) {
      if (a.element(i).value_at(x) != value) continue;
      int candidate = hom.image_value(i, y);
      if (img < 0) {
        img = candidate;
      } else if (img != candidate) {
        throw DecomposeError("WeightIllDefined",
                             "omega[" + hom.target().space().label(y) + "](" + g.label(value) +
                                 ") would be both " + g.label(img) + " and " + g.label(candidate),
                             y);
      }
    }
    images.push_back(img);
  }
  return GroupMap::partial(g, domain, images);
}

bool Decomposition::support_map_is_bijective() const {
  const int nx = hom.source().space().size();
  if (static_cast<int>(support_map.size()) != nx) return false;
  std::uint32_t seen = 0;
  for (int x : support_map) seen |= std::uint32_t{1} << x;
  return std::popcount(seen) == nx;
}

bool Decomposition::all_weights_automorphisms() const {
  for (const GroupMap& w : weights) {
    if (w.kind() != MapKind::Automorphism) return false;
  }
  return true;
}

GroupMap inverse_automorphism(const FiniteGroup& g, const GroupMap& m) {
  if (m.kind() != MapKind::Automorphism) throw InputError("only automorphisms invert");
  std::vector<int> images(static_cast<std::size_t>(g.order()), -1);
  for (int a = 0; a < g.order(); ++a) images[static_cast<std::size_t>(m.apply(a))] = a;
  return GroupMap::total(g, std::move(images));
}

Decomposition decompose(const CodeHom& hom, std::size_t closure_cap) {
  std::vector<int> h = support_map(hom);
  const int ny = hom.target().space().size();
  std::vector<GroupMap> weights;
  weights.reserve(static_cast<std::size_t>(ny));
  for (int y = 0; y < ny; ++y) weights.push_back(weight_at(hom, h, y));

  // Representation identity on every (f, y); holds by construction of the
  // weights, so a failure here is an internal inconsistency.
  const FunctionGroup& a = hom.source();
  for (int i = 0; i < a.size(); ++i) {
    for (int y = 0; y < ny; ++y) {
      int via_weight = weights[static_cast<std::size_t>(y)].apply(
          a.element(i).value_at(h[static_cast<std::size_t>(y)]));
      if (via_weight != hom.image_value(i, y)) {
        throw DecomposeError("RepresentationFailed",
                             "Hf(y) != omega[y](f(h(y))) for f = " +
                                 format_function(a.group(), a.element(i)) + " at " +
                                 hom.target().space().label(y),
                             y);
      }
    }
  }

  Decomposition dec{hom,
                    std::move(h),
                    std::move(weights),
                    is_biseparating(hom),
                    check_hypotheses(hom.source(), closure_cap),
                    check_hypotheses(hom.target(), closure_cap),
                    std::nullopt};

  if (dec.biseparating.holds && dec.source_hypotheses.all_hold() &&
      dec.target_hypotheses.all_hold()) {
    CodeHom back = *hom.inverse();
    InverseConsistency inv;
    inv.support_map = support_map(back);
    const int nx = hom.source().space().size();
    inv.weights.reserve(static_cast<std::size_t>(nx));
    for (int x = 0; x < nx; ++x) inv.weights.push_back(weight_at(back, inv.support_map, x));

    inv.support_maps_invert = true;
    for (int y = 0; y < ny; ++y) {
      if (inv.support_map[static_cast<std::size_t>(dec.support_map[static_cast<std::size_t>(y)])] != y)
        inv.support_maps_invert = false;
    }
    for (int x = 0; x < nx; ++x) {
      if (dec.support_map[static_cast<std::size_t>(inv.support_map[static_cast<std::size_t>(x)])] != x)
        inv.support_maps_invert = false;
    }

    const FiniteGroup& g = a.group();
    inv.weights_invert = true;
    for (int y = 0; y < ny && inv.weights_invert; ++y) {
      const GroupMap& omega = dec.weights[static_cast<std::size_t>(y)];
      const GroupMap& rho =
          inv.weights[static_cast<std::size_t>(dec.support_map[static_cast<std::size_t>(y)])];
      for (int v = 0; v < g.order(); ++v) {
        if (!omega.defined_at(v) || !rho.defined_at(v) || rho.apply(omega.apply(v)) != v ||
            omega.apply(rho.apply(v)) != v) {
          inv.weights_invert = false;
          break;
        }
      }
    }
    dec.inverse = std::move(inv);
  }
  return dec;
}

namespace {

std::vector<int> cozero_profile(const FunctionGroup& code) {
  std::vector<int> profile;
  profile.reserve(static_cast<std::size_t>(code.size()));
  for (int i = 0; i < code.size(); ++i)
    profile.push_back(std::popcount(code.cozero_mask(i)));
  std::sort(profile.begin(), profile.end());
  return profile;
}

std::uint64_t subgroup_image_mask(const GroupMap& aut, std::uint64_t members) {
  std::uint64_t out = 0;
  for (int v = 0; v < 64; ++v) {
    if ((members >> v) & 1u) out |= std::uint64_t{1} << aut.apply(v);
  }
  return out;
}

}  // namespace

EquivalenceResult decide_equivalence(const FunctionGroup& a, const FunctionGroup& b,
                                     std::uint64_t search_cap, std::size_t closure_cap) {
  if (!(a.group() == b.group()))
    throw PreconditionError("equivalence is defined for codes over one group");
  const int nx = a.space().size();
  const int ny = b.space().size();
  if (nx != ny) return {std::nullopt, "space_size_mismatch"};
  if (a.size() != b.size()) return {std::nullopt, "code_size_mismatch"};
  if (cozero_profile(a) != cozero_profile(b)) return {std::nullopt, "cozero_profile_mismatch"};

  const FiniteGroup& g = a.group();
  std::vector<GroupMap> auts = enumerate_automorphisms(g);

  // Unpruned candidate count |Y|! * |Aut|^|Y|, saturating.
  std::uint64_t budget = 1;
  bool overflow = false;
  auto mul = [&](std::uint64_t k) {
    if (k != 0 && budget > UINT64_MAX / k) overflow = true;
    else budget *= k;
  };
  for (int i = 2; i <= ny; ++i) mul(static_cast<std::uint64_t>(i));
  for (int i = 0; i < ny; ++i) mul(auts.size());
  if (overflow || budget > search_cap)
    throw SearchBudgetError(overflow ? UINT64_MAX : budget, search_cap);

  // Evaluation-image compatibility: omega[y] must carry G_{h(y)} onto G_y.
  std::vector<std::uint64_t> ev_a(static_cast<std::size_t>(nx));
  std::vector<std::uint64_t> ev_b(static_cast<std::size_t>(ny));
  for (int x = 0; x < nx; ++x) ev_a[static_cast<std::size_t>(x)] = evaluation_image(a, x).member_mask();
  for (int y = 0; y < ny; ++y) ev_b[static_cast<std::size_t>(y)] = evaluation_image(b, y).member_mask();
  std::vector<std::vector<std::vector<int>>> allowed(
      static_cast<std::size_t>(ny), std::vector<std::vector<int>>(static_cast<std::size_t>(nx)));
  for (int y = 0; y < ny; ++y) {
    for (int x = 0; x < nx; ++x) {
      for (std::size_t w = 0; w < auts.size(); ++w) {
        if (subgroup_image_mask(auts[w], ev_a[static_cast<std::size_t>(x)]) ==
            ev_b[static_cast<std::size_t>(y)])
          allowed[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)].push_back(
              static_cast<int>(w));
      }
    }
  }

  std::vector<std::uint32_t> b_cozeros;
  b_cozeros.reserve(static_cast<std::size_t>(b.size()));
  for (int i = 0; i < b.size(); ++i) b_cozeros.push_back(b.cozero_mask(i));
  std::sort(b_cozeros.begin(), b_cozeros.end());

  std::vector<int> perm(static_cast<std::size_t>(ny));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool feasible = true;
    for (int y = 0; y < ny && feasible; ++y)
      feasible = !allowed[static_cast<std::size_t>(y)][static_cast<std::size_t>(perm[static_cast<std::size_t>(y)])].empty();
    if (!feasible) continue;

    // Weights never move a cozero: coz(Tf) = h^-1(coz f) regardless of omega.
    std::vector<std::uint32_t> transported;
    transported.reserve(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) {
      std::uint32_t coz = a.cozero_mask(i);
      std::uint32_t m = 0;
      for (int y = 0; y < ny; ++y) {
        if ((coz >> perm[static_cast<std::size_t>(y)]) & 1u) m |= std::uint32_t{1} << y;
      }
      transported.push_back(m);
    }
    std::sort(transported.begin(), transported.end());
    if (transported != b_cozeros) continue;

    // Odometer over the allowed automorphism lists, last point fastest.
    std::vector<std::size_t> pick(static_cast<std::size_t>(ny), 0);
    for (;;) {
      bool maps_onto = true;
      std::vector<int> element_map(static_cast<std::size_t>(a.size()));
      for (int i = 0; i < a.size() && maps_onto; ++i) {
        GFunction t;
        t.values.resize(static_cast<std::size_t>(ny));
        for (int y = 0; y < ny; ++y) {
          const auto& options =
              allowed[static_cast<std::size_t>(y)][static_cast<std::size_t>(perm[static_cast<std::size_t>(y)])];
          const GroupMap& aut = auts[static_cast<std::size_t>(options[pick[static_cast<std::size_t>(y)]])];
          t.values[static_cast<std::size_t>(y)] =
              aut.apply(a.element(i).value_at(perm[static_cast<std::size_t>(y)]));
        }
        int idx = b.index_of(t);
        if (idx < 0) maps_onto = false;
        else element_map[static_cast<std::size_t>(i)] = idx;
      }
      if (maps_onto) {
        CodeHom induced = CodeHom::from_element_map(a, b, std::move(element_map));
        Decomposition dec{induced, perm, {}, is_biseparating(induced),
                          check_hypotheses(a, closure_cap), check_hypotheses(b, closure_cap),
                          std::nullopt};
        dec.weights.reserve(static_cast<std::size_t>(ny));
        for (int y = 0; y < ny; ++y) {
          const auto& options =
              allowed[static_cast<std::size_t>(y)][static_cast<std::size_t>(perm[static_cast<std::size_t>(y)])];
          dec.weights.push_back(auts[static_cast<std::size_t>(options[pick[static_cast<std::size_t>(y)]])]);
        }
        InverseConsistency inv;
        inv.support_map.assign(static_cast<std::size_t>(nx), -1);
        for (int y = 0; y < ny; ++y)
          inv.support_map[static_cast<std::size_t>(perm[static_cast<std::size_t>(y)])] = y;
        inv.weights.reserve(static_cast<std::size_t>(nx));
        for (int x = 0; x < nx; ++x)
          inv.weights.push_back(inverse_automorphism(
              g, dec.weights[static_cast<std::size_t>(inv.support_map[static_cast<std::size_t>(x)])]));
        inv.support_maps_invert = true;
        inv.weights_invert = true;
        dec.inverse = std::move(inv);
        return {std::move(dec), ""};
      }
      // advance odometer
      int pos = ny - 1;
      while (pos >= 0) {
        const auto& options =
            allowed[static_cast<std::size_t>(pos)][static_cast<std::size_t>(perm[static_cast<std::size_t>(pos)])];
        if (++pick[static_cast<std::size_t>(pos)] < options.size()) break;
        pick[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return {std::nullopt, "search_exhausted"};
}

bool PropertyReport::all_passed() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return false;
  }
  return true;
}

const PropertyCheck* PropertyReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

PropertyReport check_support_properties(const CodeHom& hom, std::size_t closure_cap) {
  std::vector<int> h = support_map(hom);
  const FunctionGroup& a = hom.source();
  const FunctionGroup& b = hom.target();
  const PointSpace& xs = a.space();
  const PointSpace& ys = b.space();
  const int nx = xs.size();
  const int ny = ys.size();
  const std::uint32_t full = xs.full_mask();
  const int e = a.group().identity();

  std::vector<PointFunctional> functionals;
  functionals.reserve(static_cast<std::size_t>(ny));
  for (int y = 0; y < ny; ++y) functionals.push_back(point_functional(hom, y));

  // Support table per target point.
  std::vector<std::vector<char>> supp(static_cast<std::size_t>(ny),
                                      std::vector<char>(static_cast<std::size_t>(full) + 1, 0));
  for (int y = 0; y < ny; ++y) {
    for (std::uint32_t m = 0; m <= full; ++m)
      supp[static_cast<std::size_t>(y)][m] = is_support(functionals[static_cast<std::size_t>(y)], PointSet(nx, m)) ? 1 : 0;
  }

  PropertyReport report;
  auto add = [&](const std::string& name, CheckStatus status, std::string detail) {
    report.checks.push_back(PropertyCheck{name, status, std::move(detail)});
  };

  {  // the whole space is always a support
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    for (int y = 0; y < ny; ++y) {
      if (!supp[static_cast<std::size_t>(y)][full]) {
        status = CheckStatus::Fail;
        detail = "X is not a support at " + ys.label(y);
        break;
      }
    }
    add("full_space_is_support", status, detail);
  }

  {  // no support is empty (functionals are non-null here)
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    for (int y = 0; y < ny; ++y) {
      if (supp[static_cast<std::size_t>(y)][0]) {
        status = CheckStatus::Fail;
        detail = "empty set is a support at " + ys.label(y);
        break;
      }
    }
    add("supports_nonempty", status, detail);
  }

  {  // supersets of supports are supports
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    for (int y = 0; y < ny && status == CheckStatus::Pass; ++y) {
      for (std::uint32_t m = 0; m <= full && status == CheckStatus::Pass; ++m) {
        if (!supp[static_cast<std::size_t>(y)][m]) continue;
        for (int x = 0; x < nx; ++x) {
          std::uint32_t up = m | (std::uint32_t{1} << x);
          if (!supp[static_cast<std::size_t>(y)][up]) {
            status = CheckStatus::Fail;
            detail = "support " + format_set(xs, m) + " at " + ys.label(y) +
                     " has non-support superset " + format_set(xs, up);
            break;
          }
        }
      }
    }
    add("supports_upward_closed", status, detail);
  }

  {  // equal restriction to a support forces equal image
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    for (int y = 0; y < ny && status == CheckStatus::Pass; ++y) {
      for (std::uint32_t m = 0; m <= full && status == CheckStatus::Pass; ++m) {
        if (!supp[static_cast<std::size_t>(y)][m]) continue;
        std::map<std::vector<int>, int> first_with_restriction;
        for (int i = 0; i < a.size(); ++i) {
          std::vector<int> restricted;
          for (int x = 0; x < nx; ++x) {
            if ((m >> x) & 1u) restricted.push_back(a.element(i).value_at(x));
          }
          auto [it, inserted] = first_with_restriction.emplace(std::move(restricted), i);
          if (!inserted && functionals[static_cast<std::size_t>(y)].value(it->second) !=
                               functionals[static_cast<std::size_t>(y)].value(i)) {
            status = CheckStatus::Fail;
            detail = "f = " + format_function(a.group(), a.element(it->second)) +
                     " and g = " + format_function(a.group(), a.element(i)) + " agree on support " +
                     format_set(xs, m) + " at " + ys.label(y) + " but map differently";
            break;
          }
        }
      }
    }
    add("support_restriction_determines_value", status, detail);
  }

  {  // any two supports intersect — needs source controllable + separating
    SeparationVerdict sep = separates_points(a);
    ControllabilityVerdict ctrl = controllable(a, closure_cap);
    if (!sep.holds || !ctrl.holds) {
      add("supports_pairwise_intersect", CheckStatus::Skipped,
          "source code must be controllable and separate points");
    } else {
      CheckStatus status = CheckStatus::Pass;
      std::string detail;
      for (int y = 0; y < ny && status == CheckStatus::Pass; ++y) {
        for (std::uint32_t m1 = 0; m1 <= full && status == CheckStatus::Pass; ++m1) {
          if (!supp[static_cast<std::size_t>(y)][m1]) continue;
          for (std::uint32_t m2 = m1; m2 <= full; ++m2) {
            if (!supp[static_cast<std::size_t>(y)][m2]) continue;
            if ((m1 & m2) == 0) {
              status = CheckStatus::Fail;
              detail = "disjoint supports " + format_set(xs, m1) + " and " + format_set(xs, m2) +
                       " at " + ys.label(y);
              break;
            }
          }
        }
      }
      add("supports_pairwise_intersect", status, detail);
    }
  }

  {  // S inside Z(f) pulls back: h^-1(S) inside Z(Hf)
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    for (std::uint32_t m = 0; m <= full && status == CheckStatus::Pass; ++m) {
      std::uint32_t preimage = 0;
      for (int y = 0; y < ny; ++y) {
        if ((m >> h[static_cast<std::size_t>(y)]) & 1u) preimage |= std::uint32_t{1} << y;
      }
      for (int i = 0; i < a.size(); ++i) {
        if (m & ~a.zero_mask(i)) continue;
        std::uint32_t target_zero = b.zero_mask(hom.image_index(i));
        if (preimage & ~target_zero) {
          status = CheckStatus::Fail;
          detail = "S = " + format_set(xs, m) + " inside Z(f) for f = " +
                   format_function(a.group(), a.element(i)) + " but h^-1(S) escapes Z(Hf)";
          break;
        }
      }
    }
    add("zero_subset_preimage", status, detail);
  }

  {  // h(coz(Hf)) inside coz(f)
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    for (int i = 0; i < a.size(); ++i) {
      std::uint32_t target_coz = b.cozero_mask(hom.image_index(i));
      std::uint32_t image = 0;
      for (int y = 0; y < ny; ++y) {
        if ((target_coz >> y) & 1u) image |= std::uint32_t{1} << h[static_cast<std::size_t>(y)];
      }
      if (image & ~a.cozero_mask(i)) {
        status = CheckStatus::Fail;
        detail = "h(coz(Hf)) escapes coz(f) for f = " + format_function(a.group(), a.element(i));
        break;
      }
    }
    add("support_map_shrinks_cozero", status, detail);
  }

  {  // injective homs have onto support maps
    if (!hom.is_injective()) {
      add("injective_implies_onto_support_map", CheckStatus::Skipped, "hom is not injective");
    } else {
      std::uint32_t covered = 0;
      for (int y = 0; y < ny; ++y) covered |= std::uint32_t{1} << h[static_cast<std::size_t>(y)];
      if (covered == full) {
        add("injective_implies_onto_support_map", CheckStatus::Pass, "");
      } else {
        add("injective_implies_onto_support_map", CheckStatus::Fail,
            "support map misses " + format_set(xs, full & ~covered));
      }
    }
  }

  (void)e;
  return report;
}

}  // namespace sepcomp
