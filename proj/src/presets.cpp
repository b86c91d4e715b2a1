#include "qalg/presets.hpp"

#include <map>
#include <mutex>

#include "qalg/text_format.hpp"

namespace qalg {

namespace {

constexpr std::string_view kLocal6 = R"(# local algebra of dimension 6
vertices: 1
a: 1 -> 1
b: 1 -> 1
relation: a*a
relation: a*b + b*b + b*b*a
)";

constexpr std::string_view kLocal6End = R"(vertices: v1 v2 v3 v4 v5
a10: v1 -> v2
a9: v1 -> v4
a8: v2 -> v3
a7: v2 -> v5
a6: v3 -> v4
a4: v4 -> v1
a5: v4 -> v1
a3: v4 -> v5
a1: v5 -> v2
a2: v5 -> v2
(1)*a6*a5, (1)*a2*a8, (-1)*a9*a4+(-1)*a10*a8*a6*a4+(1)*a9*a4*a9*a5
(1)*a1*a7+(1)*a1*a8*a6*a3+(1)*a1*a7*a1*a7+(2)*a1*a7*a2*a7+(1)*a2*a7*a1*a7
(-1)*a7*a1*a7+(-1/2)*a8*a6*a4*a9*a3+(-1)*a7*a1*a8*a6*a3+(1)*a7*a1*a7*a1*a7
(1)*a9*a3+(1)*a10*a8*a6*a3*a2*a7
(-1)*a10*a7+(-1)*a10*a7*a2*a7+(1)*a9*a5*a10*a8*a6*a3
(-1)*a7*a2+(1)*a8*a6*a3*a1+(1)*a8*a6*a4*a9*a5*a10
(1)*a6*a3*a1*a8+(1)*a6*a4*a9*a5*a10*a8
(-1)*a5*a9+(1)*a3*a1*a8*a6+(1)*a4*a9*a5*a10*a8*a6
(1)*a4*a10+(-1)*a3*a1+(-1)*a3*a2*a7*a1+(1)*a5*a10*a8*a6*a3*a2
)";

constexpr std::string_view kL2 = R"(vertices: 1
x: 1 -> 1
relation: x^2
)";

constexpr std::string_view kA2 = R"(vertices: 1 2
a: 1 -> 2
)";

const std::map<std::string_view, std::string_view, std::less<>>& table() {
  static const std::map<std::string_view, std::string_view, std::less<>> t = {
      {"local6", kLocal6}, {"local6-end", kLocal6End}, {"L2", kL2}, {"A2", kA2}};
  return t;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) out.emplace_back(k);
  return out;
}

std::string_view preset_text(std::string_view name) {
  auto it = table().find(name);
  return it == table().end() ? std::string_view() : it->second;
}

AlgebraPtr preset_algebra(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, AlgebraPtr, std::less<>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  auto text = preset_text(name);
  if (text.empty()) return nullptr;
  auto a = load_algebra(text);
  cache.emplace(std::string(name), a);
  return a;
}

}  // namespace qalg
