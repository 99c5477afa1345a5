#include "unssp/json_io.hpp"

namespace unssp {

using nlohmann::json;

json path_json(const Graph& g, const Path& p) {
  return json{{"vertices", path_vertices(g, p)}, {"arc_ids", p.arcs}};
}

json path_record(const Graph& g, const Path& p, Value value) {
  json j = path_json(g, p);
  j["value"] = value;
  return j;
}

json valued_path_json(const Graph& g, const EmittedPath& e) {
  return json{{"value", e.value}, {"path", path_json(g, e.path)}};
}

json stats_json(const RunStats& stats) {
  json j{{"paths", stats.paths},
         {"uspp_solves", stats.uspp_solves},
         {"failed_solves", stats.failed_solves},
         {"arcs_scanned", stats.arcs_scanned},
         {"backtracks", stats.backtracks},
         {"truncated", stats.truncated}};
  j["f_star"] = stats.f_star ? json(*stats.f_star) : json(nullptr);
  return j;
}

json complete_set_json(const Graph& g, const MinimalCompleteSet& set) {
  json arr = json::array();
  for (const auto& e : set.entries) arr.push_back(valued_path_json(g, e));
  return arr;
}

std::string rational_string(const BigRational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

json representatives_json(const Graph& g, const Representatives& reps) {
  json arr = json::array();
  for (std::size_t i = 0; i < reps.witnesses.size(); ++i) {
    const auto& w = reps.witnesses[i];
    if (!w) {
      arr.push_back(nullptr);
      continue;
    }
    json j = valued_path_json(g, *w);
    const Interval& iv = reps.partition.intervals[i];
    j["interval"] = json{{"lo", rational_string(iv.lo)},
                         {"hi", rational_string(iv.hi)},
                         {"closed", iv.closed}};
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace unssp
