#include "chroma/protocols.hpp"

#include <algorithm>

#include "chroma/errors.hpp"

namespace chroma {

const char* protocol_name(Protocol p) {
    switch (p) {
        case Protocol::WriteScan: return "is";
        case Protocol::ObliviousScan: return "is-prime";
        case Protocol::Iterated: return "iis";
        case Protocol::IteratedOpt: return "iis-opt";
    }
    return "?";
}

void ProgramConfig::validate() const {
    if (n < 0) throw ConfigError("n must be >= 0");
    if (K < 1) throw ConfigError("K must be >= 1");
    if ((protocol == Protocol::WriteScan || protocol == Protocol::ObliviousScan) &&
        K != 1)
        throw ConfigError("single-shot protocols take K = 1");
    if (protocol == Protocol::Iterated || protocol == Protocol::IteratedOpt) {
        if (!delta) throw ConfigError("iterated protocols need a decision map");
    }
    if (protocol == Protocol::IteratedOpt && !table)
        throw ConfigError("optimized protocol needs a specialization table");
}

namespace {

// Consult the table at round entry; returns true if the process decided.
bool opt_entry_check(const ProgramConfig& cfg, ProcessState& st) {
    std::optional<int> decide =
        cfg.table->lookup(st.pid, StageId{st.k, st.d}, st.value);
    if (!decide) return false;
    st.output = decide;
    st.decided_at = StageId{st.k, st.d};
    st.phase = Phase::Done;
    return true;
}

void begin_round(const ProgramConfig& cfg, ProcessState& st) {
    st.phase = Phase::ToWrite;
    st.read_mask = 0;
    st.acc.clear();
    if (cfg.protocol == Protocol::IteratedOpt) opt_entry_check(cfg, st);
}

// The scan of round (k,d) completed with the given view; apply the
// protocol's round rule.
void finish_round(const ProgramConfig& cfg, ProcessState& st, ExecutionTrace* trace) {
    std::vector<Label> view = st.acc;
    std::sort(view.begin(), view.end());
    const bool full = static_cast<int>(view.size()) == st.d + 1;

    Label result = st.value;
    bool moved = false;
    switch (cfg.protocol) {
        case Protocol::WriteScan: {
            // WScan always returns the pair; IS keeps it only when the view
            // witnessed d+1 writes.
            Label scanned = Label::pair(st.pid, view);
            result = full ? scanned : st.value;
            moved = full;
            break;
        }
        case Protocol::ObliviousScan:
        case Protocol::Iterated:
        case Protocol::IteratedOpt: {
            Label u = full ? Label::pair(st.pid, view) : st.value;
            result = u;
            moved = (u != st.value);
            break;
        }
    }
    if (trace)
        trace->rounds.push_back({st.pid, StageId{st.k, st.d}, result, moved});

    if (!moved) {
        // d = 0 always succeeds: at most one process reaches round 0 and it
        // sees its own write.
        --st.d;
        begin_round(cfg, st);
        return;
    }
    if (cfg.protocol == Protocol::WriteScan || cfg.protocol == Protocol::ObliviousScan) {
        st.final_vertex = result;
        st.phase = Phase::Done;
        return;
    }
    if (st.k == cfg.K) {
        st.final_vertex = result;
        st.output = cfg.delta->at(result);
        st.phase = Phase::Done;
        return;
    }
    st.value = result;
    ++st.k;
    st.d = cfg.n;
    begin_round(cfg, st);
}

std::vector<int> reads_for(const ProgramConfig& cfg, const ProcessState& st) {
    if (!cfg.read_order) {
        std::vector<int> order(static_cast<std::size_t>(cfg.n) + 1);
        for (int i = 0; i <= cfg.n; ++i) order[static_cast<std::size_t>(i)] = i;
        return order;
    }
    std::vector<int> order = cfg.read_order(st.pid, StageId{st.k, st.d});
    std::vector<int> check = order;
    std::sort(check.begin(), check.end());
    for (int i = 0; i <= cfg.n; ++i)
        if (i >= static_cast<int>(check.size()) || check[static_cast<std::size_t>(i)] != i)
            throw ConfigError("read_order must be a permutation of 0..n");
    return order;
}

}  // namespace

ProcessState initial_state(const ProgramConfig& cfg, int pid, const Label& input) {
    ProcessState st;
    st.pid = pid;
    st.value = input;
    st.k = 1;
    st.d = cfg.n;
    begin_round(cfg, st);
    return st;
}

void step_process(const ProgramConfig& cfg, ProcessState& st, Memory& mem,
                  ExecutionTrace* trace) {
    if (st.done()) throw InvalidSchedule("step for a terminated process");
    const StageId stage{st.k, st.d};
    auto& cells = mem[stage];
    if (cells.empty()) cells.resize(static_cast<std::size_t>(cfg.n) + 1);

    if (st.phase == Phase::ToWrite) {
        auto& cell = cells[static_cast<std::size_t>(st.pid)];
        if (cell && *cell != st.value)
            throw PreconditionViolated("register written twice with different values");
        cell = st.value;
        if (trace) {
            TraceStep ts;
            ts.pid = st.pid;
            ts.is_write = true;
            ts.stage = stage;
            ts.written = st.value;
            trace->steps.push_back(std::move(ts));
        }
        st.phase = Phase::Collecting;
        return;
    }

    // Collecting: read the next register in the configured order.
    std::vector<int> order = reads_for(cfg, st);
    int done_reads = 0;
    for (int i = 0; i <= cfg.n; ++i)
        if (st.read_mask & (1u << i)) ++done_reads;
    const int cell_idx = order[static_cast<std::size_t>(done_reads)];
    st.read_mask |= 1u << cell_idx;
    const auto& cell = cells[static_cast<std::size_t>(cell_idx)];
    if (cell) st.acc.push_back(*cell);
    if (trace) {
        TraceStep ts;
        ts.pid = st.pid;
        ts.stage = stage;
        ts.cell = cell_idx;
        if (cell) ts.observed = *cell;
        trace->steps.push_back(std::move(ts));
    }
    if (done_reads + 1 == cfg.n + 1) finish_round(cfg, st, trace);
}

}  // namespace chroma
