// chromasim: chromatic subdivisions, immediate-snapshot protocol simulation,
// and protocol specialization, with JSON/CSV artifacts for every command.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "chroma/errors.hpp"
#include "chroma/json_io.hpp"
#include "chroma/savings.hpp"
#include "chroma/verification.hpp"

using namespace chroma;

namespace {

std::string resolve_out(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("CHROMASIM_OUTDIR");
    if (!dir || !*dir) return path;
    return std::string(dir) + "/" + path;
}

void emit(const Json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << dump_json(j);
    } else {
        write_json_file(resolve_out(out), j);
        std::cout << "wrote " << resolve_out(out) << "\n";
    }
}

Complex full_simplex_complex(int n) {
    std::vector<Color> colors;
    for (int i = 0; i <= n; ++i) colors.push_back(i);
    return Complex::cls(Simplex::of_bases(colors));
}

struct TaskBundle {
    std::unique_ptr<Tower> tower;
    Task task;
};

TaskBundle make_task(const std::string& name, int n, int K) {
    TaskBundle b;
    if (name == "renaming") {
        b.tower = std::make_unique<Tower>(full_simplex_complex(2), 2);
        b.task = renaming_task(*b.tower);
    } else if (name == "parent-map") {
        b.tower = std::make_unique<Tower>(full_simplex_complex(n), K);
        b.task = parent_map_task(*b.tower);
    } else if (name == "chromatic-agreement") {
        b.tower = std::make_unique<Tower>(full_simplex_complex(n), 1);
        b.task = chromatic_agreement_task(*b.tower);
    } else {
        throw ConfigError("unknown task '" + name +
                          "' (expected renaming, parent-map, chromatic-agreement)");
    }
    return b;
}

Protocol parse_protocol(const std::string& name) {
    if (name == "is") return Protocol::WriteScan;
    if (name == "is-prime") return Protocol::ObliviousScan;
    if (name == "iis") return Protocol::Iterated;
    if (name == "iis-opt") return Protocol::IteratedOpt;
    throw ConfigError("unknown protocol '" + name + "'");
}

std::vector<std::vector<int>> parse_partition(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block;
    std::string token;
    auto flush_token = [&]() {
        if (token.empty()) return;
        block.push_back(std::stoi(token));
        token.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush_token();
        } else if (c == ';') {
            flush_token();
            if (!block.empty()) blocks.push_back(std::move(block));
            block = {};
        } else if (!isspace(static_cast<unsigned char>(c))) {
            token += c;
        }
    }
    flush_token();
    if (!block.empty()) blocks.push_back(std::move(block));
    return blocks;
}

int cmd_subdivide(int n, int K, const std::string& stage_text, const std::string& out) {
    Tower tower(full_simplex_complex(n), K);
    int pos = tower.final_position();
    if (!stage_text.empty()) {
        auto comma = stage_text.find(',');
        if (comma == std::string::npos)
            throw ConfigError("--stage expects \"k,d\"");
        StageId id{std::stoi(stage_text.substr(0, comma)),
                   std::stoi(stage_text.substr(comma + 1))};
        pos = tower.position(id);
    }
    const Complex& c = tower.complex_at(pos);
    Json j = complex_to_json(c, n);
    Json parents = Json::array();
    for (const Label& v : c.vertices()) {
        Label p = tower.composite_parent(pos, tower.input_position(), v);
        parents.push_back(Json::array({label_to_json(v), label_to_json(p)}));
    }
    j["parents"] = parents;
    j["tower_hash"] = tower.hash();
    emit(j, out);
    return 0;
}

int cmd_run(const std::string& protocol_name_, int n, int K, const std::string& task_name,
            const std::string& schedule_file, std::uint64_t seed, bool have_seed,
            const std::string& partition_text, const std::string& table_file,
            const std::string& out) {
    ProgramConfig cfg;
    cfg.protocol = parse_protocol(protocol_name_);
    cfg.n = n;
    cfg.K = K;

    TaskBundle bundle;
    SpecializationTable table;
    if (cfg.protocol == Protocol::Iterated || cfg.protocol == Protocol::IteratedOpt) {
        if (task_name.empty()) throw ConfigError("--task is required for iis/iis-opt");
        bundle = make_task(task_name, n, K);
        cfg.n = bundle.task.n;
        cfg.K = bundle.task.K;
        cfg.delta = &bundle.task.delta;
        if (cfg.protocol == Protocol::IteratedOpt) {
            if (table_file.empty()) {
                DescendantIndex index(*bundle.tower);
                table = specialize(bundle.task, *bundle.tower, index);
            } else {
                table = table_from_json(load_json_file(table_file));
                if (table.tower_hash() != bundle.tower->hash())
                    throw ConfigError("table tower hash does not match this tower");
            }
            cfg.table = &table;
        }
    }

    std::unique_ptr<Scheduler> sched;
    CrashSet crashes;
    if (!schedule_file.empty()) {
        auto [steps, cs] = schedule_from_json(load_json_file(schedule_file));
        crashes = cs;
        sched = std::make_unique<ScriptedScheduler>(steps);
    } else if (!partition_text.empty()) {
        sched = std::make_unique<ScriptedScheduler>(
            targeted_schedule(parse_partition(partition_text), cfg.n, cfg.K));
    } else if (have_seed) {
        sched = std::make_unique<RandomScheduler>(seed);
    } else {
        throw ConfigError("one of --schedule, --seed, --partition is required");
    }

    ExecutionTrace trace = run_protocol(cfg, base_inputs(cfg.n), *sched, crashes);
    Json j = trace_to_json(trace);
    j["schedule"] = schedule_to_json(trace.executed, crashes);
    if (bundle.tower) j["tower_hash"] = bundle.tower->hash();
    emit(j, out);
    return 0;
}

int cmd_enumerate(const std::string& protocol_name_, int n, bool crashes,
                  bool branch_read_order, const std::string& out) {
    ProgramConfig cfg;
    cfg.protocol = parse_protocol(protocol_name_);
    cfg.n = n;
    if (cfg.protocol != Protocol::WriteScan && cfg.protocol != Protocol::ObliviousScan)
        throw ConfigError("enumerate supports the single-shot protocols");
    EnumerationOptions opts;
    opts.allow_crashes = crashes;
    opts.branch_read_order = branch_read_order;
    EnumerationResult result = enumerate_executions(cfg, base_inputs(n), opts);
    Json outputs = Json::array();
    for (const auto& o : result.outputs)
        outputs.push_back(Json{{"simplex", simplex_to_json(o.outputs)},
                               {"witness", o.witness}});
    emit(Json{{"protocol", protocol_name_},
              {"n", n},
              {"crashes", crashes},
              {"branch_read_order", branch_read_order},
              {"states_visited", result.states_visited},
              {"count", outputs.size()},
              {"outputs", outputs}},
         out);
    return 0;
}

int cmd_optimize(const std::string& task_name, int n, int K, const std::string& out) {
    TaskBundle bundle = make_task(task_name, n, K);
    DescendantIndex index(*bundle.tower);
    SpecializationTable table = specialize(bundle.task, *bundle.tower, index);
    emit(table_to_json(table), out);
    return 0;
}

int cmd_compare(const std::string& task_name, int n, int K, int schedules,
                std::uint64_t seed, const std::string& out, const std::string& csv) {
    TaskBundle bundle = make_task(task_name, n, K);
    DescendantIndex index(*bundle.tower);
    SpecializationTable table = specialize(bundle.task, *bundle.tower, index);
    SavingsReport report = savings_report(bundle.task, table, schedules, seed);

    Json runs = Json::array();
    for (std::size_t i = 0; i < report.runs.size(); ++i) {
        const PairedRun& pr = report.runs[i];
        runs.push_back(Json{{"schedule_id", i},
                            {"generic", Json{{"writes", pr.generic_ops.writes},
                                             {"reads", pr.generic_ops.reads}}},
                            {"optimized", Json{{"writes", pr.optimized_ops.writes},
                                               {"reads", pr.optimized_ops.reads}}},
                            {"identical_outputs", pr.identical_outputs}});
    }
    Json j{{"task", bundle.task.id},
           {"tower_hash", bundle.tower->hash()},
           {"schedules", schedules},
           {"seed", seed},
           {"generic_total_ops", report.generic_total_ops},
           {"optimized_total_ops", report.optimized_total_ops},
           {"dominance", report.dominance},
           {"runs", runs}};
    emit(j, out);

    if (!csv.empty()) {
        std::ofstream os(resolve_out(csv));
        if (!os) throw ConfigError("cannot write " + csv);
        os << "schedule_id,pid,generic_writes,generic_reads,optimized_writes,"
              "optimized_reads,identical_outputs\n";
        for (std::size_t i = 0; i < report.runs.size(); ++i) {
            const PairedRun& pr = report.runs[i];
            for (int pid = 0; pid <= bundle.task.n; ++pid) {
                const auto up = static_cast<std::size_t>(pid);
                os << i << ',' << pid << ',' << pr.generic_ops.writes[up] << ','
                   << pr.generic_ops.reads[up] << ',' << pr.optimized_ops.writes[up]
                   << ',' << pr.optimized_ops.reads[up] << ','
                   << (pr.identical_outputs ? 1 : 0) << "\n";
            }
        }
        std::cout << "wrote " << resolve_out(csv) << "\n";
    }
    return 0;
}

int cmd_delta_table(const std::string& task_name, int n, int K, const std::string& out) {
    TaskBundle bundle = make_task(task_name, n, K);
    emit(task_to_json(bundle.task, *bundle.tower), out);
    return 0;
}

int cmd_verify(int n, int K, int samples, std::uint64_t seed, bool exhaustive,
               const std::string& table_file, const std::string& out) {
    VerifyConfig cfg;
    cfg.n = n;
    cfg.K = K;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.exhaustive_only = exhaustive || n < 2;
    SpecializationTable injected;
    if (!table_file.empty()) {
        injected = table_from_json(load_json_file(table_file));
        cfg.injected_table = &injected;
    }
    std::vector<CheckResult> results = verify_suite(cfg);
    bool all = true;
    Json checks = Json::array();
    for (const CheckResult& r : results) {
        all = all && r.pass;
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.details
                  << "\n";
        checks.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"details", r.details}});
    }
    if (!out.empty())
        write_json_file(resolve_out(out),
                        Json{{"n", n},
                             {"K", K},
                             {"samples", samples},
                             {"seed", seed},
                             {"pass", all},
                             {"checks", checks}});
    std::cout << (all ? "verify: all checks passed" : "verify: FAILURES") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromatic subdivisions and immediate-snapshot protocol simulation"};
    app.require_subcommand(1);

    int n = 2, K = 1, samples = 10000, schedules = 100;
    std::uint64_t seed = 7;
    std::string out, csv, stage, task_name, protocol = "is-prime";
    std::string schedule_file, partition, table_file;
    bool crashes = false, branch_read_order = false, exhaustive = false;

    CLI::App* sub = app.add_subcommand("subdivide", "build Ch^K of the full simplex");
    sub->add_option("--n", n, "dimension / highest process id")->required();
    sub->add_option("--iter", K, "iterations of the subdivision");
    sub->add_option("--stage", stage, "intermediate stage k,d to emit");
    sub->add_option("--out", out, "output JSON file");

    CLI::App* run = app.add_subcommand("run", "simulate one protocol execution");
    run->add_option("--protocol", protocol, "is | is-prime | iis | iis-opt");
    run->add_option("--n", n, "highest process id");
    run->add_option("--iter", K, "iterations (iis families)");
    run->add_option("--task", task_name, "task supplying the decision map");
    run->add_option("--schedule", schedule_file, "schedule JSON file");
    auto* seed_opt = run->add_option("--seed", seed, "random scheduler seed");
    run->add_option("--partition", partition, "ordered blocks, e.g. \"1,2;0\"");
    run->add_option("--table", table_file, "specialization table JSON (iis-opt)");
    run->add_option("--out", out, "output JSON file");

    CLI::App* enu = app.add_subcommand("enumerate", "exhaustive interleaving search");
    enu->add_option("--protocol", protocol, "is | is-prime");
    enu->add_option("--n", n, "highest process id (<= 2)")->required();
    enu->add_flag("--crashes", crashes, "collect crashy outcomes too");
    enu->add_flag("--branch-read-order", branch_read_order,
                  "branch on register read order");
    enu->add_option("--out", out, "output JSON file");

    CLI::App* opt = app.add_subcommand("optimize", "emit a specialization table");
    opt->add_option("--task", task_name, "renaming | parent-map | chromatic-agreement")
        ->required();
    opt->add_option("--n", n, "highest process id (parametric tasks)");
    opt->add_option("--iter", K, "iterations (parametric tasks)");
    opt->add_option("--out", out, "output JSON file");

    CLI::App* cmp = app.add_subcommand("compare", "paired generic/optimized runs");
    cmp->add_option("--task", task_name, "task name")->required();
    cmp->add_option("--n", n, "highest process id (parametric tasks)");
    cmp->add_option("--iter", K, "iterations (parametric tasks)");
    cmp->add_option("--schedules", schedules, "number of paired runs");
    cmp->add_option("--seed", seed, "base seed");
    cmp->add_option("--out", out, "report JSON file");
    cmp->add_option("--csv", csv, "per-process counters CSV");

    CLI::App* dt = app.add_subcommand("delta-table", "emit a task definition");
    dt->add_option("--task", task_name, "task name")->required();
    dt->add_option("--n", n, "highest process id (parametric tasks)");
    dt->add_option("--iter", K, "iterations (parametric tasks)");
    dt->add_option("--out", out, "output JSON file");

    CLI::App* ver = app.add_subcommand("verify", "run the lemma/theorem check suite");
    ver->add_option("--n", n, "2 for the full battery, 1 for exhaustive-only");
    ver->add_option("--iter", K, "iterations (assumed 2 for the full battery)");
    ver->add_option("--samples", samples, "random schedules per sampled check");
    ver->add_option("--seed", seed, "base seed");
    ver->add_flag("--exhaustive", exhaustive, "restrict to exhaustive checks");
    ver->add_option("--table", table_file, "inject a specialization table");
    ver->add_option("--out", out, "report JSON file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sub->parsed()) return cmd_subdivide(n, K, stage, out);
        if (run->parsed())
            return cmd_run(protocol, n, K, task_name, schedule_file, seed,
                           seed_opt->count() > 0, partition, table_file, out);
        if (enu->parsed())
            return cmd_enumerate(protocol, n, crashes, branch_read_order, out);
        if (opt->parsed()) return cmd_optimize(task_name, n, K, out);
        if (cmp->parsed())
            return cmd_compare(task_name, n, K, schedules, seed, out, csv);
        if (dt->parsed()) return cmd_delta_table(task_name, n, K, out);
        if (ver->parsed())
            return cmd_verify(n, K, samples, seed, exhaustive, table_file, out);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
