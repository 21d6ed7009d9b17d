#include "sepcomp/hom.hpp"

#include <algorithm>

namespace sepcomp {

namespace {

std::string describe(const FunctionGroup& code, int i) {
  std::string out = "(";
  const GFunction& f = code.element(i);
  for (int x = 0; x < f.size(); ++x) {
    if (x) out += " ";
    out += code.group().label(f.value_at(x));
  }
  return out + ")";
}

}  // namespace

std::vector<int> CodeHom::extend_generator_images(const FunctionGroup& source,
                                                  const FunctionGroup& target,
                                                  const std::vector<GFunction>& generator_images) {
  if (!(source.group() == target.group()))
    throw InputError("source and target must share one group");
  if (generator_images.size() != source.generators().size())
    throw InputError("one image per generator required");

  std::vector<int> image_index;
  image_index.reserve(generator_images.size());
  for (const auto& img : generator_images) {
    int t = target.index_of(img);
    if (t < 0)
      throw HomBuildError("ImageOutsideTarget", "a generator image is not an element of the target code");
    image_index.push_back(t);
  }

  std::vector<int> map(static_cast<std::size_t>(source.size()), -1);
  // Seed from the declared generators; duplicate declarations must agree.
  for (std::size_t k = 0; k < image_index.size(); ++k) {
    int i = source.index_of(source.generators()[k]);
    if (map[static_cast<std::size_t>(i)] >= 0 && map[static_cast<std::size_t>(i)] != image_index[k]) {
      throw HomBuildError("NotWellDefined",
                          "generator " + describe(source, i) + " is given two distinct images", i);
    }
    map[static_cast<std::size_t>(i)] = image_index[k];
  }
  if (source.identity_index() >= 0 && source.generators().empty())
    map[static_cast<std::size_t>(source.identity_index())] = target.identity_index();

  // Propagate along products to a fixpoint. Any element reachable by two
  // words with different images is a NotWellDefined conflict.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < source.size(); ++i) {
      if (map[static_cast<std::size_t>(i)] < 0) continue;
      for (int j = 0; j < source.size(); ++j) {
        if (map[static_cast<std::size_t>(j)] < 0) continue;
        int k = source.product_index(i, j);
        int img = target.product_index(map[static_cast<std::size_t>(i)],
                                       map[static_cast<std::size_t>(j)]);
        int& slot = map[static_cast<std::size_t>(k)];
        if (slot < 0) {
          slot = img;
          changed = true;
        } else if (slot != img) {
          throw HomBuildError("NotWellDefined",
                              "element " + describe(source, k) +
                                  " receives two distinct images from different words",
                              k);
        }
      }
    }
  }
  for (int i = 0; i < source.size(); ++i) {
    if (map[static_cast<std::size_t>(i)] < 0)
      throw InputError("declared generators do not generate the source code");
  }
  return map;
}

void CodeHom::verify_hom_law(const FunctionGroup& source, const FunctionGroup& target,
                             const std::vector<int>& element_map) {
  for (int i = 0; i < source.size(); ++i) {
    for (int j = 0; j < source.size(); ++j) {
      int k = source.product_index(i, j);
      int expect = target.product_index(element_map[static_cast<std::size_t>(i)],
                                        element_map[static_cast<std::size_t>(j)]);
      if (element_map[static_cast<std::size_t>(k)] != expect) {
        throw HomBuildError("NotHomomorphic",
                            "H(f*g) != H(f)*H(g) for f = " + describe(source, i) +
                                ", g = " + describe(source, j),
                            -1, {i, j});
      }
    }
  }
}

CodeHom CodeHom::build(FunctionGroup source, FunctionGroup target,
                       const std::vector<GFunction>& generator_images) {
  std::vector<int> map = extend_generator_images(source, target, generator_images);
  verify_hom_law(source, target, map);
  return CodeHom(std::move(source), std::move(target), std::move(map));
}

std::optional<CodeHom> CodeHom::try_build(const FunctionGroup& source, const FunctionGroup& target,
                                          const std::vector<GFunction>& generator_images) {
  try {
    return build(source, target, generator_images);
  } catch (const HomBuildError&) {
    return std::nullopt;
  }
}

CodeHom CodeHom::from_element_map(FunctionGroup source, FunctionGroup target,
                                  std::vector<int> element_map) {
  if (static_cast<int>(element_map.size()) != source.size())
    throw InputError("element map must cover every source element");
  for (int t : element_map) {
    if (t < 0 || t >= target.size())
      throw HomBuildError("ImageOutsideTarget", "element map leaves the target code");
  }
  if (!(source.group() == target.group()))
    throw InputError("source and target must share one group");
  verify_hom_law(source, target, element_map);
  return CodeHom(std::move(source), std::move(target), std::move(element_map));
}

std::vector<GFunction> CodeHom::generator_images() const {
  std::vector<GFunction> out;
  out.reserve(source_.generators().size());
  for (const auto& gen : source_.generators())
    out.push_back(image(source_.index_of(gen)));
  return out;
}

bool CodeHom::is_injective() const {
  std::vector<char> hit(static_cast<std::size_t>(target_.size()), 0);
  for (int t : element_map_) {
    if (hit[static_cast<std::size_t>(t)]) return false;
    hit[static_cast<std::size_t>(t)] = 1;
  }
  return true;
}

bool CodeHom::is_bijective() const {
  return source_.size() == target_.size() && is_injective();
}

std::optional<CodeHom> CodeHom::inverse() const {
  if (!is_bijective()) return std::nullopt;
  std::vector<int> inv(static_cast<std::size_t>(target_.size()), -1);
  for (int i = 0; i < source_.size(); ++i)
    inv[static_cast<std::size_t>(element_map_[static_cast<std::size_t>(i)])] = i;
  return from_element_map(target_, source_, std::move(inv));
}

PointFunctional::PointFunctional(FunctionGroup source, std::vector<int> values)
    : source_(std::move(source)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != source_.size())
    throw InputError("functional needs one value per source element");
  const FiniteGroup& g = source_.group();
  for (int v : values_) {
    if (v < 0 || v >= g.order()) throw InputError("functional value out of range");
    if (v != g.identity()) is_null_ = false;
  }
  // Homomorphism law, checked on every pair.
  for (int i = 0; i < source_.size(); ++i) {
    for (int j = 0; j < source_.size(); ++j) {
      int k = source_.product_index(i, j);
      if (values_[static_cast<std::size_t>(k)] !=
          g.mul(values_[static_cast<std::size_t>(i)], values_[static_cast<std::size_t>(j)]))
        throw InputError("functional values are not a homomorphism");
    }
  }
}

PointFunctional point_functional(const CodeHom& hom, int y) {
  if (y < 0 || y >= hom.target().space().size()) throw InputError("point index out of range");
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(hom.source().size()));
  for (int i = 0; i < hom.source().size(); ++i) values.push_back(hom.image_value(i, y));
  return PointFunctional(hom.source(), std::move(values));
}

PointFunctional evaluation_functional(const FunctionGroup& code, int x) {
  if (x < 0 || x >= code.space().size()) throw InputError("point index out of range");
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(code.size()));
  for (int i = 0; i < code.size(); ++i) values.push_back(code.element(i).value_at(x));
  return PointFunctional(code, std::move(values));
}

SeparatingVerdict is_separating(const CodeHom& hom) {
  const FunctionGroup& a = hom.source();
  const FunctionGroup& b = hom.target();
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      if (a.cozero_mask(i) & a.cozero_mask(j)) continue;
      if (b.cozero_mask(hom.image_index(i)) & b.cozero_mask(hom.image_index(j)))
        return {false, ElementPairWitness{i, j}};
    }
  }
  return {true, std::nullopt};
}

SeparatingVerdict is_separating(const PointFunctional& phi) {
  const FunctionGroup& a = phi.source();
  const int e = a.group().identity();
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      if (a.cozero_mask(i) & a.cozero_mask(j)) continue;
      if (phi.value(i) != e && phi.value(j) != e) return {false, ElementPairWitness{i, j}};
    }
  }
  return {true, std::nullopt};
}

const char* BiseparatingVerdict::failure_name() const {
  switch (failure) {
    case BiseparatingFailure::None: return "none";
    case BiseparatingFailure::NotBijective: return "not_bijective";
    case BiseparatingFailure::ForwardNotSeparating: return "forward_not_separating";
    case BiseparatingFailure::InverseNotSeparating: return "inverse_not_separating";
  }
  return "unknown";
}

BiseparatingVerdict is_biseparating(const CodeHom& hom) {
  if (!hom.is_bijective())
    return {false, BiseparatingFailure::NotBijective, std::nullopt};
  SeparatingVerdict fwd = is_separating(hom);
  if (!fwd.holds) return {false, BiseparatingFailure::ForwardNotSeparating, fwd.witness};
  SeparatingVerdict bwd = is_separating(*hom.inverse());
  if (!bwd.holds) return {false, BiseparatingFailure::InverseNotSeparating, bwd.witness};
  return {true, BiseparatingFailure::None, std::nullopt};
}

}  // namespace sepcomp
