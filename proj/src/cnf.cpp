#include "modhom/cnf.hpp"

#include <cstdlib>
#include <sstream>

#include "modhom/errors.hpp"

namespace modhom {

void CnfFormula::validate() const {
  if (n < 0) throw InputError("negative variable count");
  for (const auto& c : clauses) {
    if (c.empty()) throw InputError("empty clause");
    for (int lit : c)
      if (lit == 0 || std::abs(lit) > n) throw InputError("literal " + std::to_string(lit) + " out of range");
  }
}

CnfFormula parse_dimacs_cnf(const std::string& text) {
  CnfFormula phi;
  std::istringstream all(text);
  std::string row;
  int line = 0, declared = -1;
  bool header = false;
  std::vector<int> current;
  auto fail = [&](const std::string& msg) -> void {
    throw InputError("line " + std::to_string(line) + ": " + msg);
  };
  while (std::getline(all, row)) {
    ++line;
    std::istringstream in(row);
    std::string tok;
    if (!(in >> tok) || tok == "c") continue;
    if (tok == "p") {
      std::string fmt;
      if (header) fail("duplicate header");
      if (!(in >> fmt >> phi.n >> declared) || fmt != "cnf" || phi.n < 0 || declared < 0) fail("bad header");
      header = true;
      continue;
    }
    if (!header) fail("clause before header");
    in.clear();
    in.str(row);
    long long lit;
    while (in >> lit) {
      if (lit == 0) {
        if (current.empty()) fail("empty clause");
        phi.clauses.push_back(current);
        current.clear();
      } else {
        if (std::llabs(lit) > phi.n) fail("literal " + std::to_string(lit) + " out of range");
        current.push_back(static_cast<int>(lit));
      }
    }
    if (!in.eof()) fail("unexpected token");
  }
  if (!header) fail("missing header");
  if (!current.empty()) fail("last clause not terminated by 0");
  if (static_cast<int>(phi.clauses.size()) != declared) {
    fail("header declares " + std::to_string(declared) + " clauses, found " + std::to_string(phi.clauses.size()));
  }
  return phi;
}

std::string format_dimacs_cnf(const CnfFormula& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.n << " " << phi.clauses.size() << "\n";
  for (const auto& c : phi.clauses) {
    for (int lit : c) out << lit << " ";
    out << "0\n";
  }
  return out.str();
}

std::uint64_t count_sat(const CnfFormula& phi, const Budget& budget) {
  phi.validate();
  if (phi.n > budget.sat_max_vars) {
    throw BudgetExceeded("model counting limited to " + std::to_string(budget.sat_max_vars) + " variables");
  }
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < (1ULL << phi.n); ++a) {
    bool sat = true;
    for (const auto& c : phi.clauses) {
      bool clause = false;
      for (int lit : c) {
        bool value = a >> (std::abs(lit) - 1) & 1;
        if (lit > 0 ? value : !value) {
          clause = true;
          break;
        }
      }
      if (!clause) {
        sat = false;
        break;
      }
    }
    count += sat;
  }
  return count;
}

}  // namespace modhom
