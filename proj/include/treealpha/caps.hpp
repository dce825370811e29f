#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ta {

// Limits for every exhaustive routine. Exceeding one raises CapExceeded.
struct Caps {
  int alpha = 40;                          // |X| for alpha_exact
  int pattern = 12;                        // |V(h)| for contains_induced
  std::uint64_t mincore_subsets = 5'000'000;  // sum_{i<k} C(n,i)
  int treewidth = 20;                      // vertices per component for exact treewidth
  int constricted = 14;                    // n for is_constricted
  int tree_alpha = 10;                     // n for tree_alpha_exact
  int mwis_brute = 24;                     // n for brute-force MWIS
  std::uint64_t mwis_states = 4'000'000;   // total DP states for td MWIS
  int path_fallback = 18;                  // n below which induced paths are enumerated exhaustively
};

// Process-wide caps; initialised from TREEALPHA_CAP_OVERRIDE ("alpha=60,treewidth=22").
Caps& caps();

// Applies "name=value,..." overrides; throws std::invalid_argument on unknown names.
void apply_cap_overrides(Caps& c, std::string_view spec);

// RAII override used by tests and pipelines that need a larger limit temporarily.
class CapScope {
 public:
  explicit CapScope(const Caps& replacement) : saved_(caps()) { caps() = replacement; }
  ~CapScope() { caps() = saved_; }
  CapScope(const CapScope&) = delete;
  CapScope& operator=(const CapScope&) = delete;

 private:
  Caps saved_;
};

}  // namespace ta
