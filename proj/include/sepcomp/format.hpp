#pragma once

#include <string>

#include "sepcomp/code.hpp"

namespace sepcomp {

/// "{x0 x2}" — members in point order; "{}" when empty.
std::string format_set(const PointSpace& space, std::uint32_t mask);

/// "(a e b)" — values in point order.
std::string format_function(const FiniteGroup& group, const GFunction& f);

/// "(x0, x1)"
std::string format_point_pair(const PointSpace& space, int first, int second);

}  // namespace sepcomp
