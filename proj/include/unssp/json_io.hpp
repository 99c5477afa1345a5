#pragma once

#include <json.hpp>

#include "unssp/complete_set.hpp"
#include "unssp/enumeration.hpp"
#include "unssp/graph.hpp"

namespace unssp {

/// {"vertices":[...],"arc_ids":[...],"value":v}
nlohmann::json path_record(const Graph& g, const Path& p, Value value);

/// {"vertices":[...],"arc_ids":[...]}
nlohmann::json path_json(const Graph& g, const Path& p);

/// {"value":v,"path":{...}}
nlohmann::json valued_path_json(const Graph& g, const EmittedPath& e);

nlohmann::json stats_json(const RunStats& stats);

/// Array of {"value","path"} in ascending value.
nlohmann::json complete_set_json(const Graph& g, const MinimalCompleteSet& set);

/// One slot per interval: null when empty, otherwise {"value","path",
/// "interval":{"lo","hi","closed"}} with the bounds as exact rational strings.
nlohmann::json representatives_json(const Graph& g, const Representatives& reps);

std::string rational_string(const BigRational& r);

}  // namespace unssp
