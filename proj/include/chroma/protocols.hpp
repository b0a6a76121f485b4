#ifndef CHROMA_PROTOCOLS_HPP
#define CHROMA_PROTOCOLS_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "chroma/optimizer.hpp"
#include "chroma/tasks.hpp"

namespace chroma {

/// The four protocol families, as flattened step machines so a scheduler
/// can interleave at atomic read/write granularity.
enum class Protocol {
    WriteScan,      // multi-round write&scan (returns the view pair per round)
    ObliviousScan,  // multi-round write&oblivious-scan reformulation
    Iterated,       // generic iterated immediate snapshot with decision map
    IteratedOpt,    // table-driven early-deciding variant
};

const char* protocol_name(Protocol p);

struct ProgramConfig {
    Protocol protocol = Protocol::ObliviousScan;
    int n = 1;
    int K = 1;  // iterations; 1 for the single-shot protocols
    const DecisionMap* delta = nullptr;          // Iterated / IteratedOpt
    const SpecializationTable* table = nullptr;  // IteratedOpt
    /// Per-invocation register read order (must be a permutation of 0..n);
    /// ascending when unset.
    std::function<std::vector<int>(int pid, StageId stage)> read_order;

    void validate() const;  // throws ConfigError
};

/// One shared-memory array per round: n+1 single-writer registers, written
/// at most once each.
using Memory = std::map<StageId, std::vector<std::optional<Label>>>;

enum class Phase { ToWrite, Collecting, Done };

struct ProcessState {
    int pid = 0;
    Label value = Label::base(0);  // v_i, the current private value
    int k = 1;
    int d = 0;
    Phase phase = Phase::ToWrite;
    unsigned read_mask = 0;        // registers read in the current collect
    std::vector<Label> acc;        // non-bottom values observed so far
    std::optional<Label> final_vertex;
    std::optional<int> output;          // decision-map output
    std::optional<StageId> decided_at;  // table decision point, if any

    bool done() const { return phase == Phase::Done; }
};

struct TraceStep {
    int pid = 0;
    bool is_write = false;
    StageId stage;
    int cell = -1;                  // reads only
    std::optional<Label> observed;  // reads: value seen (empty = bottom)
    std::optional<Label> written;   // writes
};

struct RoundRecord {
    int pid = 0;
    StageId stage;
    Label result = Label::base(0);  // what the scan returned
    bool success = false;           // witnessed d+1 values
};

enum class OutcomeKind { Running, Decided, Crashed };

struct Outcome {
    OutcomeKind kind = OutcomeKind::Running;
    std::optional<Label> vertex;  // final subdivision vertex, when reached
    std::optional<int> output;    // decision-map output, when applicable
    int crashed_at = -1;
};

struct OpCounters {
    std::vector<int> writes;
    std::vector<int> reads;
    int total_writes = 0;
    int total_reads = 0;
};

struct ExecutionTrace {
    Protocol protocol = Protocol::ObliviousScan;
    int n = 1;
    int K = 1;
    std::vector<Label> inputs;
    std::vector<TraceStep> steps;
    std::vector<RoundRecord> rounds;
    std::vector<Outcome> outcomes;
    std::vector<int> executed;  // the pid sequence that actually ran
};

/// Initial state for process `pid` with private input `input`. For the
/// table-driven protocol this may already decide (and consume no steps).
ProcessState initial_state(const ProgramConfig& cfg, int pid, const Label& input);

/// Executes one atomic action (a register write or read) for a running
/// process, including any round bookkeeping that action completes. Appends
/// to `trace` when given.
void step_process(const ProgramConfig& cfg, ProcessState& st, Memory& mem,
                  ExecutionTrace* trace);

}  // namespace chroma

#endif
