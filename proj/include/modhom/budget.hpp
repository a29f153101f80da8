#pragma once

#include <cstdint>

namespace modhom {

// Size and work limits shared by the exhaustive routines. Exceeding any of
// them raises BudgetExceeded instead of running unbounded.
struct Budget {
  int iso_max_vertices = 12;
  std::uint64_t max_group_size = 5'000'000;
  std::uint64_t enumeration_states = 100'000'000;
  int skeleton_max_free = 8;
  int wbis_flat_max = 24;
  int wbis_branch_max = 40;
  int spin_max_free = 24;
  int sat_max_vars = 24;
};

inline const Budget& default_budget() {
  static const Budget b{};
  return b;
}

}  // namespace modhom
