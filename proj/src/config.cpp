#include "modhom/config.hpp"

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "modhom/errors.hpp"
#include "modhom/zp.hpp"

namespace modhom {

void RunConfig::validate() const {
  if (budget.iso_max_vertices <= 0) throw InputError("iso_max_vertices must be positive");
  if (budget.enumeration_states == 0) throw InputError("enumeration_states must be positive");
  if (spin_max_m < 0 || spin_entry_cap < 0) throw InputError("spin bounds must be non-negative");
  if (jobs < 1) throw InputError("jobs must be at least 1");
  if (primes.empty()) throw InputError("prime list is empty");
  for (auto p : primes)
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
}

namespace {

std::uint64_t parse_positive(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size() || v <= 0) throw InputError("");
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    throw InputError(std::string(what) + " must be a positive integer, got '" + text + "'");
  }
}

}  // namespace

void apply_config_json(RunConfig& cfg, const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw InputError("config must be a JSON object");
  try {
    for (auto& [key, value] : j.items()) {
      if (key == "iso_max_vertices") cfg.budget.iso_max_vertices = value.get<int>();
      else if (key == "enumeration_states") cfg.budget.enumeration_states = value.get<std::uint64_t>();
      else if (key == "spin_max_m") cfg.spin_max_m = value.get<int>();
      else if (key == "spin_entry_cap") cfg.spin_entry_cap = value.get<int>();
      else if (key == "primes") cfg.primes = value.get<std::vector<std::uint64_t>>();
      else if (key == "jobs") cfg.jobs = value.get<int>();
      else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
      else throw InputError("config: unknown key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("config: ") + e.what());
  }
}

void apply_environment(RunConfig& cfg) {
  if (const char* s = std::getenv("MODHOM_BUDGET_STATES"); s && *s)
    cfg.budget.enumeration_states = parse_positive(s, "MODHOM_BUDGET_STATES");
  if (const char* s = std::getenv("SPIN_SEARCH_BOUND"); s && *s)
    cfg.spin_max_m = static_cast<int>(parse_positive(s, "SPIN_SEARCH_BOUND"));
}

std::vector<std::uint64_t> parse_prime_list(const std::string& csv) {
  std::vector<std::uint64_t> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::uint64_t p = parse_positive(item, "prime");
    if (!is_prime(p)) throw InputError(item + " is not prime");
    out.push_back(p);
  }
  if (out.empty()) throw InputError("empty prime list");
  return out;
}

}  // namespace modhom
