#ifndef SYMCAP_SCENE_IO_HPP
#define SYMCAP_SCENE_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "symcap/capacity.hpp"
#include "symcap/inequality.hpp"

namespace symcap {

using json = nlohmann::json;

json set_to_json(const PlanarSet& set);
PlanarSet set_from_json(const json& j);

json scene_to_json(const Scene& scene);
Scene scene_from_json(const json& j);

json map_to_json(const ExteriorMap& map);
json inequality_report_to_json(const InequalityReport& report);
json capacity_report_to_json(const CapacityReport& report);
json monte_carlo_to_json(const MonteCarloEstimate& est);

/// Columns: name, lhs, rhs, slack, pass (one row per report).
std::string corpus_csv(const std::vector<CorpusItemResult>& results);

Scene load_scene_file(const std::string& path);
void save_scene_file(const std::string& path, const Scene& scene);

/// All *.json scenes in a directory, sorted by filename.
std::vector<Scene> load_corpus_dir(const std::string& dir);

}  // namespace symcap

#endif
