#pragma once

#include <json.hpp>

#include "modhom/dichotomy.hpp"
#include "modhom/homcount.hpp"
#include "modhom/reduction.hpp"
#include "modhom/spin.hpp"
#include "modhom/vectors.hpp"
#include "modhom/wbis.hpp"
#include "modhom/xred.hpp"

namespace modhom {

// nlohmann::json keeps object keys sorted, which the golden files rely on.
// Vertex ids are written 1-indexed, big integers as decimal strings.
using Json = nlohmann::json;

std::string big_to_string(const BigInt& v);

Json to_json(const Graph& g);
Json to_json(const BipartiteGraph& g);
Json to_json(const HomCount& c);
Json to_json(const ReductionTrace& t);
Json to_json(const AbPath& path, const std::vector<int>& id_map = {});
Json to_json(const Classification& c);
Json to_json(const TupleVector& v);
Json to_json(const Distinguisher& d);
Json to_json(const BGadget& g);
Json to_json(const GPhi& g);
Json to_json(const SatReductionReport& r);
Json to_json(const GadgetVector& kv);
Json to_json(const SearchResult& r);
Json to_json(const SpinVerdict& v);
Json to_json(const WbisToHomsReport& r);
Json to_json(const ConnBisReport& r);
Json to_json(const P4Report& r);
Json to_json(const CompositeCount& c);

// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace modhom
