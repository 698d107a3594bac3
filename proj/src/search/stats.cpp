#include "pdbkit/search/stats.hpp"

#include <sstream>

#include "json.hpp"

namespace pdbkit {

std::string stats_csv_header() {
    return "instance,heuristic,cost,nodes_generated,nodes_expanded,max_stored,seconds";
}

std::string stats_csv_row(const std::string& instance_id, const std::string& heuristic,
                          const SearchStats& s) {
    std::ostringstream out;
    out << instance_id << ',' << heuristic << ',';
    if (s.solution_cost)
        out << *s.solution_cost;
    out << ',' << s.nodes_generated << ',' << s.nodes_expanded << ',' << s.max_stored << ','
        << s.seconds;
    return out.str();
}

std::string stats_json_row(const std::string& instance_id, const std::string& heuristic,
                           const SearchStats& s) {
    nlohmann::json j;
    j["instance"] = instance_id;
    j["heuristic"] = heuristic;
    if (s.solution_cost)
        j["cost"] = *s.solution_cost;
    else
        j["cost"] = nullptr;
    j["nodes_generated"] = s.nodes_generated;
    j["nodes_expanded"] = s.nodes_expanded;
    j["max_stored"] = s.max_stored;
    j["seconds"] = s.seconds;
    if (s.budget_exhausted)
        j["budget_exhausted"] = true;
    return j.dump();
}

} // namespace pdbkit
