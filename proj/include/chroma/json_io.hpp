#ifndef CHROMA_JSON_IO_HPP
#define CHROMA_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "chroma/optimizer.hpp"
#include "chroma/simulator.hpp"
#include "chroma/tasks.hpp"

namespace chroma {

using Json = nlohmann::ordered_json;

// Labels: {"base": c} or {"pair": [c, [label,...]]}, view in canonical order.
Json label_to_json(const Label& l);
Label label_from_json(const Json& j);

Json simplex_to_json(const Simplex& s);
Simplex simplex_from_json(const Json& j);

// Complexes: {"n": n, "facets": [[label,...],...]} with facets sorted.
Json complex_to_json(const Complex& c, int n);
std::pair<Complex, int> complex_from_json(const Json& j);

// Schedules: {"steps": [pid,...], "crashes": [[pid, step],...]}.
Json schedule_to_json(const std::vector<int>& steps, const CrashSet& crashes);
std::pair<std::vector<int>, CrashSet> schedule_from_json(const Json& j);

// Traces: steps, per-round results, outcomes, counters.
Json trace_to_json(const ExecutionTrace& trace);

// Specialization tables:
// {"task":..., "tower_hash":..., "entries": [[pid,[k,d],label,{"decide":u}|"continue"],...]}
Json table_to_json(const SpecializationTable& table);
SpecializationTable table_from_json(const Json& j);

// Task definitions with delta as an explicit vertex -> name table.
Json task_to_json(const Task& task, const Tower& tower);

std::string dump_json(const Json& j);  // canonical text form (2-space indent)
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace chroma

#endif
