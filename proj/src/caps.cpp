#include "treealpha/caps.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ta {

void apply_cap_overrides(Caps& c, std::string_view spec) {
  while (!spec.empty()) {
    auto comma = spec.find(',');
    auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("cap override needs name=value: " + std::string(item));
    std::string name(item.substr(0, eq));
    long long value = std::stoll(std::string(item.substr(eq + 1)));
    if (value < 0) throw std::invalid_argument("cap override must be nonnegative: " + name);
    if (name == "alpha")
      c.alpha = static_cast<int>(value);
    else if (name == "pattern")
      c.pattern = static_cast<int>(value);
    else if (name == "mincore")
      c.mincore_subsets = static_cast<std::uint64_t>(value);
    else if (name == "treewidth")
      c.treewidth = static_cast<int>(value);
    else if (name == "constricted")
      c.constricted = static_cast<int>(value);
    else if (name == "tree-alpha" || name == "tree_alpha")
      c.tree_alpha = static_cast<int>(value);
    else if (name == "mwis-brute" || name == "mwis_brute")
      c.mwis_brute = static_cast<int>(value);
    else if (name == "mwis-states" || name == "mwis_states")
      c.mwis_states = static_cast<std::uint64_t>(value);
    else if (name == "path-fallback" || name == "path_fallback")
      c.path_fallback = static_cast<int>(value);
    else
      throw std::invalid_argument("unknown cap: " + name);
  }
}

Caps& caps() {
  static Caps instance = [] {
    Caps c;
    if (const char* env = std::getenv("TREEALPHA_CAP_OVERRIDE")) apply_cap_overrides(c, env);
    return c;
  }();
  return instance;
}

}  // namespace ta
