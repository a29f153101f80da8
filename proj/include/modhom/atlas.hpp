#pragma once

#include <cstdint>
#include <vector>

#include "modhom/json_out.hpp"

namespace modhom {

// Verdict table over all non-isomorphic trees with 1..max_n vertices and each
// prime, in (n, canonical form, prime) order whatever the job count.
Json atlas_table(int max_n, const std::vector<std::uint64_t>& primes, int jobs,
                 const Budget& budget = default_budget());

// One CSV row per (gamma, lambda) in Z_p x Z_p: gamma,lambda,verdict,kind,kv,z0.
std::string spin_sweep_csv(std::uint64_t p, const SearchBounds& bounds, int jobs);

}  // namespace modhom
