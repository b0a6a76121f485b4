#include "chroma/json_io.hpp"

#include <fstream>

#include "chroma/errors.hpp"

namespace chroma {

Json label_to_json(const Label& l) {
    if (l.is_base()) return Json{{"base", l.color()}};
    Json view = Json::array();
    for (const Label& m : l.view()) view.push_back(label_to_json(m));
    return Json{{"pair", Json::array({l.color(), view})}};
}

Label label_from_json(const Json& j) {
    if (j.contains("base")) return Label::base(j.at("base").get<int>());
    if (j.contains("pair")) {
        const Json& p = j.at("pair");
        std::vector<Label> view;
        for (const Json& m : p.at(1)) view.push_back(label_from_json(m));
        return Label::pair(p.at(0).get<int>(), std::move(view));
    }
    throw ConfigError("label JSON must have \"base\" or \"pair\"");
}

Json simplex_to_json(const Simplex& s) {
    Json out = Json::array();
    for (const Label& v : s.vertices()) out.push_back(label_to_json(v));
    return out;
}

Simplex simplex_from_json(const Json& j) {
    std::vector<Label> verts;
    for (const Json& l : j) verts.push_back(label_from_json(l));
    return Simplex(std::move(verts));
}

Json complex_to_json(const Complex& c, int n) {
    Json facets = Json::array();
    for (const Simplex& f : c.facets()) facets.push_back(simplex_to_json(f));
    return Json{{"n", n}, {"facets", facets}};
}

std::pair<Complex, int> complex_from_json(const Json& j) {
    std::vector<Simplex> facets;
    for (const Json& f : j.at("facets")) facets.push_back(simplex_from_json(f));
    return {Complex(std::move(facets)), j.at("n").get<int>()};
}

Json schedule_to_json(const std::vector<int>& steps, const CrashSet& crashes) {
    Json cs = Json::array();
    for (const CrashPoint& c : crashes) cs.push_back(Json::array({c.pid, c.step}));
    return Json{{"steps", steps}, {"crashes", cs}};
}

std::pair<std::vector<int>, CrashSet> schedule_from_json(const Json& j) {
    std::vector<int> steps = j.at("steps").get<std::vector<int>>();
    CrashSet crashes;
    if (j.contains("crashes"))
        for (const Json& c : j.at("crashes"))
            crashes.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    return {std::move(steps), std::move(crashes)};
}

Json trace_to_json(const ExecutionTrace& trace) {
    Json steps = Json::array();
    for (const TraceStep& s : trace.steps) {
        Json js{{"pid", s.pid},
                {"op", s.is_write ? "write" : "read"},
                {"k", s.stage.k},
                {"d", s.stage.d}};
        if (s.is_write) {
            js["value"] = label_to_json(*s.written);
        } else {
            js["cell"] = s.cell;
            js["observed"] = s.observed ? label_to_json(*s.observed) : Json(nullptr);
        }
        steps.push_back(std::move(js));
    }
    Json rounds = Json::array();
    for (const RoundRecord& r : trace.rounds)
        rounds.push_back(Json{{"pid", r.pid},
                              {"k", r.stage.k},
                              {"d", r.stage.d},
                              {"result", label_to_json(r.result)},
                              {"success", r.success}});
    Json outcomes = Json::array();
    for (std::size_t i = 0; i < trace.outcomes.size(); ++i) {
        const Outcome& o = trace.outcomes[i];
        Json jo{{"pid", static_cast<int>(i)}};
        switch (o.kind) {
            case OutcomeKind::Decided: jo["status"] = "decided"; break;
            case OutcomeKind::Crashed: jo["status"] = "crashed"; break;
            case OutcomeKind::Running: jo["status"] = "running"; break;
        }
        jo["vertex"] = o.vertex ? label_to_json(*o.vertex) : Json(nullptr);
        jo["output"] = o.output ? Json(*o.output) : Json(nullptr);
        if (o.kind == OutcomeKind::Crashed) jo["crashed_at"] = o.crashed_at;
        outcomes.push_back(std::move(jo));
    }
    OpCounters ops = count_ops(trace);
    Json counters{{"writes", ops.writes},
                  {"reads", ops.reads},
                  {"total_writes", ops.total_writes},
                  {"total_reads", ops.total_reads}};
    return Json{{"protocol", protocol_name(trace.protocol)},
                {"n", trace.n},
                {"K", trace.K},
                {"steps", steps},
                {"rounds", rounds},
                {"outcomes", outcomes},
                {"counters", counters}};
}

Json table_to_json(const SpecializationTable& table) {
    Json entries = Json::array();
    for (const auto& e : table.entries()) {
        Json decide = e.decide ? Json{{"decide", *e.decide}} : Json("continue");
        entries.push_back(Json::array(
            {e.pid, Json::array({e.stage.k, e.stage.d}), label_to_json(e.value), decide}));
    }
    return Json{{"task", table.task_id()},
                {"tower_hash", table.tower_hash()},
                {"entries", entries}};
}

SpecializationTable table_from_json(const Json& j) {
    std::vector<SpecializationTable::Entry> entries;
    for (const Json& je : j.at("entries")) {
        SpecializationTable::Entry e;
        e.pid = je.at(0).get<int>();
        e.stage = StageId{je.at(1).at(0).get<int>(), je.at(1).at(1).get<int>()};
        e.value = label_from_json(je.at(2));
        if (je.at(3).is_object()) e.decide = je.at(3).at("decide").get<int>();
        entries.push_back(std::move(e));
    }
    return SpecializationTable(j.at("task").get<std::string>(),
                               j.at("tower_hash").get<std::uint64_t>(),
                               std::move(entries));
}

Json task_to_json(const Task& task, const Tower& tower) {
    Json overts = Json::array();
    for (const OutputVertex& v : task.output.vertices())
        overts.push_back(Json::array({v.color, v.name}));
    Json ofacets = Json::array();
    for (const OutputSimplex& f : task.output.facets) {
        Json jf = Json::array();
        for (const OutputVertex& v : f) jf.push_back(Json::array({v.color, v.name}));
        ofacets.push_back(std::move(jf));
    }
    Json delta = Json::array();
    std::vector<Label> verts = tower.final_complex().vertices();
    for (const Label& v : verts)
        delta.push_back(Json::array({label_to_json(v), task.delta.at(v)}));
    return Json{{"task", task.id},
                {"n", task.n},
                {"K", task.K},
                {"tower_hash", tower.hash()},
                {"input", complex_to_json(task.input, task.n)},
                {"output", Json{{"vertices", overts}, {"facets", ofacets}}},
                {"delta", delta}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    out << dump_json(j);
}

}  // namespace chroma
