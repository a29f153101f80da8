#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "modhom/budget.hpp"

namespace modhom {

struct RunConfig {
  Budget budget;
  int spin_max_m = 0;      // 0: per-prime default
  int spin_entry_cap = 0;  // 0: per-prime default
  std::vector<std::uint64_t> primes{2, 3, 5};
  int jobs = 1;
  std::uint64_t seed = 1;

  // Throws InputError on non-positive budgets or non-prime entries.
  void validate() const;
};

// Keys: iso_max_vertices, enumeration_states, spin_max_m, spin_entry_cap,
// primes, jobs, seed. Unknown keys are rejected.
void apply_config_json(RunConfig& cfg, const std::string& json_text);
// MODHOM_BUDGET_STATES and SPIN_SEARCH_BOUND.
void apply_environment(RunConfig& cfg);

std::vector<std::uint64_t> parse_prime_list(const std::string& csv);

// Runs fn(0..count-1) on up to `jobs` threads; results come back in index
// order regardless of scheduling. The first exception (by index) is rethrown.
template <class T>
std::vector<T> parallel_map(std::size_t count, int jobs, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < count; i += stride) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(jobs < 1 ? 1 : jobs, count));
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace modhom
