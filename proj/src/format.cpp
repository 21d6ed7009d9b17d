#include "sepcomp/format.hpp"

namespace sepcomp {

std::string format_set(const PointSpace& space, std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < space.size(); ++i) {
    if (!((mask >> i) & 1u)) continue;
    if (!first) out += " ";
    out += space.label(i);
    first = false;
  }
  return out + "}";
}

std::string format_function(const FiniteGroup& group, const GFunction& f) {
  std::string out = "(";
  for (int i = 0; i < f.size(); ++i) {
    if (i) out += " ";
    out += group.label(f.value_at(i));
  }
  return out + ")";
}

std::string format_point_pair(const PointSpace& space, int first, int second) {
  return "(" + space.label(first) + ", " + space.label(second) + ")";
}

}  // namespace sepcomp
