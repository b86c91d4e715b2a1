#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qalg/algebra.hpp"

namespace qalg {

/// Built-in algebra files, addressed as "builtin:<name>" from module files
/// and on the command line:
///
///   local6      one vertex, loops a and b, relations a^2 and ab + b^2 + b^2 a
///   local6-end  five vertices, ten arrows and eleven relations (dimension
///               165): End of the tau_2-orbit of D(local6)
///   L2          one loop x with x^2 = 0
///   A2          one arrow 1 -> 2, no relations
std::vector<std::string> preset_names();
/// Text of a preset, or empty if the name is unknown.
std::string_view preset_text(std::string_view name);
/// Built once per name and shared.
AlgebraPtr preset_algebra(std::string_view name);

}  // namespace qalg
