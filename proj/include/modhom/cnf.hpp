#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modhom/budget.hpp"

namespace modhom {

// CNF over variables 1..n; literal +i is x_i, -i is its negation.
struct CnfFormula {
  int n = 0;
  std::vector<std::vector<int>> clauses;

  // Throws InputError on empty clauses or out-of-range literals.
  void validate() const;
};

// DIMACS: "c" comments, "p cnf <n> <m>", clauses as 0-terminated literal lists.
CnfFormula parse_dimacs_cnf(const std::string& text);
std::string format_dimacs_cnf(const CnfFormula& phi);

std::uint64_t count_sat(const CnfFormula& phi, const Budget& budget = default_budget());

}  // namespace modhom
