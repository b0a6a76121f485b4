#include "chroma/simulator.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "chroma/errors.hpp"

namespace chroma {

std::optional<int> ScriptedScheduler::next(const std::vector<bool>& enabled, int) {
    while (pos_ < steps_.size()) {
        int pid = steps_[pos_];
        if (pid < 0 || pid >= static_cast<int>(enabled.size()))
            throw InvalidSchedule("scheduled pid " + std::to_string(pid) +
                                  " out of range");
        if (enabled[static_cast<std::size_t>(pid)]) {
            ++pos_;
            return pid;
        }
        if (!skip_)
            throw InvalidSchedule("schedule step " + std::to_string(pos_) +
                                  " names crashed or terminated process " +
                                  std::to_string(pid));
        ++pos_;
    }
    if (!extend_) return std::nullopt;
    for (std::size_t tries = 0; tries < enabled.size(); ++tries) {
        int pid = rr_;
        rr_ = (rr_ + 1) % static_cast<int>(enabled.size());
        if (enabled[static_cast<std::size_t>(pid)]) return pid;
    }
    return std::nullopt;
}

std::optional<int> RandomScheduler::next(const std::vector<bool>& enabled, int) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < enabled.size(); ++i)
        if (enabled[i]) ids.push_back(static_cast<int>(i));
    if (ids.empty()) return std::nullopt;
    // plain modulo keeps the stream identical across standard libraries
    return ids[static_cast<std::size_t>(rng_() % ids.size())];
}

std::vector<Label> base_inputs(int n) {
    std::vector<Label> inputs;
    for (int i = 0; i <= n; ++i) inputs.push_back(Label::base(i));
    return inputs;
}

ExecutionTrace run_protocol(const ProgramConfig& cfg, const std::vector<Label>& inputs,
                            Scheduler& sched, const CrashSet& crashes) {
    cfg.validate();
    if (static_cast<int>(inputs.size()) != cfg.n + 1)
        throw ConfigError("expected " + std::to_string(cfg.n + 1) + " inputs");
    std::vector<int> crash_at(static_cast<std::size_t>(cfg.n) + 1, -1);
    for (const CrashPoint& c : crashes) {
        if (c.pid < 0 || c.pid > cfg.n || c.step < 0)
            throw ConfigError("invalid crash point");
        int& cur = crash_at[static_cast<std::size_t>(c.pid)];
        cur = (cur < 0) ? c.step : std::min(cur, c.step);
    }

    ExecutionTrace trace;
    trace.protocol = cfg.protocol;
    trace.n = cfg.n;
    trace.K = cfg.K;
    trace.inputs = inputs;

    std::vector<ProcessState> procs;
    for (int i = 0; i <= cfg.n; ++i)
        procs.push_back(initial_state(cfg, i, inputs[static_cast<std::size_t>(i)]));
    Memory mem;

    int step = 0;
    for (;;) {
        std::vector<bool> enabled(static_cast<std::size_t>(cfg.n) + 1, false);
        bool any = false;
        for (int i = 0; i <= cfg.n; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            bool crashed = crash_at[ui] >= 0 && step >= crash_at[ui];
            enabled[ui] = !procs[ui].done() && !crashed;
            any = any || enabled[ui];
        }
        if (!any) break;
        std::optional<int> pid = sched.next(enabled, step);
        if (!pid) break;
        if (!enabled[static_cast<std::size_t>(*pid)])
            throw InvalidSchedule("scheduler picked disabled process " +
                                  std::to_string(*pid));
        step_process(cfg, procs[static_cast<std::size_t>(*pid)], mem, &trace);
        trace.executed.push_back(*pid);
        ++step;
    }

    for (int i = 0; i <= cfg.n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        Outcome out;
        if (procs[ui].done()) {
            out.kind = OutcomeKind::Decided;
            out.vertex = procs[ui].final_vertex;
            out.output = procs[ui].output;
        } else {
            out.kind = OutcomeKind::Crashed;
            out.crashed_at = crash_at[ui] >= 0 ? std::min(crash_at[ui], step) : step;
        }
        trace.outcomes.push_back(std::move(out));
    }
    return trace;
}

OpCounters count_ops(const ExecutionTrace& trace) {
    OpCounters c;
    c.writes.assign(static_cast<std::size_t>(trace.n) + 1, 0);
    c.reads.assign(static_cast<std::size_t>(trace.n) + 1, 0);
    for (const TraceStep& s : trace.steps) {
        if (s.is_write) {
            ++c.writes[static_cast<std::size_t>(s.pid)];
            ++c.total_writes;
        } else {
            ++c.reads[static_cast<std::size_t>(s.pid)];
            ++c.total_reads;
        }
    }
    return c;
}

namespace {

// Compact canonical encoding of a global state, with labels interned.
class StateEncoder {
public:
    std::string encode(const std::vector<ProcessState>& procs, const Memory& mem) {
        std::string out;
        for (const ProcessState& p : procs) {
            out += 'P';
            out += std::to_string(p.k) + "," + std::to_string(p.d) + ",";
            out += std::to_string(static_cast<int>(p.phase)) + ",";
            out += std::to_string(p.read_mask) + ",";
            out += std::to_string(intern(p.value)) + ",";
            std::vector<Label> acc = p.acc;
            std::sort(acc.begin(), acc.end());
            for (const Label& l : acc) out += std::to_string(intern(l)) + ";";
            if (p.output) out += "o" + std::to_string(*p.output);
            if (p.final_vertex) out += "f" + std::to_string(intern(*p.final_vertex));
        }
        for (const auto& [stage, cells] : mem) {
            out += 'M';
            out += stage.str();
            for (const auto& cell : cells) {
                out += cell ? std::to_string(intern(*cell)) : "_";
                out += ',';
            }
        }
        return out;
    }

private:
    int intern(const Label& l) {
        auto [it, fresh] = ids_.emplace(l, static_cast<int>(ids_.size()));
        return it->second;
    }
    std::unordered_map<Label, int, LabelHash> ids_;
};

Simplex decided_simplex(const std::vector<ProcessState>& procs) {
    std::vector<Label> verts;
    for (const ProcessState& p : procs)
        if (p.done() && p.final_vertex) verts.push_back(*p.final_vertex);
    return Simplex(std::move(verts));
}

struct DfsContext {
    const ProgramConfig* cfg;
    const EnumerationOptions* opts;
    std::unordered_set<std::string> visited;
    StateEncoder encoder;
    std::map<Simplex, std::vector<int>> found;
    std::vector<int> path;
    std::size_t states = 0;
};

void dfs(DfsContext& ctx, std::vector<ProcessState>& procs, Memory& mem) {
    std::string key = ctx.encoder.encode(procs, mem);
    if (!ctx.visited.insert(std::move(key)).second) return;
    if (++ctx.states > ctx.opts->max_states)
        throw PreconditionViolated("enumeration exceeded the state budget");
    if (static_cast<int>(ctx.path.size()) > ctx.opts->max_depth)
        throw DepthExceeded("enumeration exceeded max depth");

    bool terminal = true;
    for (const ProcessState& p : procs) terminal = terminal && p.done();
    if (ctx.opts->allow_crashes || terminal) {
        Simplex out = decided_simplex(procs);
        if (!ctx.found.count(out)) ctx.found.emplace(std::move(out), ctx.path);
    }
    if (terminal) return;

    for (int pid = 0; pid < static_cast<int>(procs.size()); ++pid) {
        ProcessState& p = procs[static_cast<std::size_t>(pid)];
        if (p.done()) continue;
        // Choice of read cell: ascending only, or every unread register.
        std::vector<int> cells{-1};
        if (ctx.opts->branch_read_order && p.phase == Phase::Collecting) {
            cells.clear();
            for (int c = 0; c <= ctx.cfg->n; ++c)
                if (!(p.read_mask & (1u << c))) cells.push_back(c);
        }
        for (int forced : cells) {
            std::vector<ProcessState> next_procs = procs;
            Memory next_mem = mem;
            ProgramConfig cfg = *ctx.cfg;
            if (forced >= 0) {
                // Present an order whose next unread slot is the forced cell.
                ProcessState& q = next_procs[static_cast<std::size_t>(pid)];
                std::vector<int> rest;
                for (int c = 0; c <= cfg.n; ++c)
                    if (!(q.read_mask & (1u << c)) && c != forced) rest.push_back(c);
                std::vector<int> already;
                for (int c = 0; c <= cfg.n; ++c)
                    if (q.read_mask & (1u << c)) already.push_back(c);
                std::vector<int> order = already;
                order.push_back(forced);
                order.insert(order.end(), rest.begin(), rest.end());
                cfg.read_order = [order](int, StageId) { return order; };
            }
            step_process(cfg, next_procs[static_cast<std::size_t>(pid)], next_mem,
                         nullptr);
            ctx.path.push_back(pid);
            dfs(ctx, next_procs, next_mem);
            ctx.path.pop_back();
        }
    }
}

}  // namespace

EnumerationResult enumerate_executions(const ProgramConfig& cfg,
                                       const std::vector<Label>& inputs,
                                       const EnumerationOptions& opts) {
    cfg.validate();
    if (cfg.n > 2)
        throw PreconditionViolated("exhaustive enumeration supports n <= 2");
    if (static_cast<int>(inputs.size()) != cfg.n + 1)
        throw ConfigError("expected " + std::to_string(cfg.n + 1) + " inputs");
    if (cfg.read_order && opts.branch_read_order)
        throw ConfigError("cannot fix a read order and branch on it");
    DfsContext ctx;
    ctx.cfg = &cfg;
    ctx.opts = &opts;
    std::vector<ProcessState> procs;
    for (int i = 0; i <= cfg.n; ++i)
        procs.push_back(initial_state(cfg, i, inputs[static_cast<std::size_t>(i)]));
    Memory mem;
    dfs(ctx, procs, mem);

    EnumerationResult result;
    result.states_visited = ctx.states;
    for (auto& [simplex, witness] : ctx.found)
        result.outputs.push_back({simplex, witness});
    return result;
}

std::vector<int> targeted_schedule(const std::vector<std::vector<int>>& partition,
                                   int n, int K) {
    std::set<int> seen;
    for (const auto& block : partition) {
        if (block.empty()) throw InvalidPartition("empty block");
        for (int pid : block) {
            if (pid < 0 || pid > n)
                throw InvalidPartition("pid " + std::to_string(pid) + " out of range");
            if (!seen.insert(pid).second)
                throw InvalidPartition("pid " + std::to_string(pid) + " repeated");
        }
    }
    std::vector<int> steps;
    for (int k = 1; k <= K; ++k) {
        int prefix = 0;
        std::vector<int> decide_round(partition.size());
        for (std::size_t j = 0; j < partition.size(); ++j) {
            prefix += static_cast<int>(partition[j].size());
            decide_round[j] = prefix - 1;  // block j returns at round |V_j|-1
        }
        for (int d = n; d >= 0; --d) {
            for (std::size_t j = 0; j < partition.size(); ++j) {
                if (decide_round[j] > d) continue;  // already returned
                for (int pid : partition[j]) steps.push_back(pid);  // writes
                for (int pid : partition[j])
                    for (int r = 0; r <= n; ++r) steps.push_back(pid);  // collects
            }
        }
    }
    return steps;
}

Simplex ordered_partition_facet(const Simplex& sigma,
                                const std::vector<std::vector<int>>& partition) {
    std::vector<Label> verts;
    std::vector<Label> accumulated;
    for (const auto& block : partition) {
        for (int pid : block) {
            const Label* v = sigma.vertex_of_color(pid);
            if (!v) throw InvalidPartition("no vertex of color " + std::to_string(pid));
            accumulated.push_back(*v);
        }
        for (int pid : block) verts.push_back(Label::pair(pid, accumulated));
    }
    return Simplex(std::move(verts));
}

}  // namespace chroma
