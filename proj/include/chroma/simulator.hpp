#ifndef CHROMA_SIMULATOR_HPP
#define CHROMA_SIMULATOR_HPP

#include <cstdint>
#include <random>

#include "chroma/protocols.hpp"

namespace chroma {

/// Crash point: the process takes no action at global step index >= step.
/// Crashes are schedule prefixes; a crashed process simply stops being
/// scheduled.
struct CrashPoint {
    int pid = 0;
    int step = 0;
};
using CrashSet = std::vector<CrashPoint>;

class Scheduler {
public:
    virtual ~Scheduler() = default;
    /// Picks the next process to act among the enabled ones (running and
    /// not crashed), or nothing to end the run.
    virtual std::optional<int> next(const std::vector<bool>& enabled, int step) = 0;
};

/// Replays a fixed pid sequence. By default a step that names a crashed or
/// terminated process throws InvalidSchedule; with `skip_unschedulable`
/// such steps are dropped (used when replaying a generic schedule against
/// the early-deciding protocol). With `extend_round_robin` the run
/// continues past the script, cycling over enabled processes, so every
/// process finishes; otherwise exhaustion ends the run and still-running
/// processes count as crashed.
class ScriptedScheduler : public Scheduler {
public:
    explicit ScriptedScheduler(std::vector<int> steps, bool skip_unschedulable = false,
                               bool extend_round_robin = false)
        : steps_(std::move(steps)),
          skip_(skip_unschedulable),
          extend_(extend_round_robin) {}

    std::optional<int> next(const std::vector<bool>& enabled, int step) override;

private:
    std::vector<int> steps_;
    std::size_t pos_ = 0;
    int rr_ = 0;
    bool skip_ = false;
    bool extend_ = false;
};

/// Uniform choice among enabled processes, reproducible from the seed.
class RandomScheduler : public Scheduler {
public:
    explicit RandomScheduler(std::uint64_t seed) : rng_(seed) {}

    std::optional<int> next(const std::vector<bool>& enabled, int step) override;

private:
    std::mt19937_64 rng_;
};

/// Runs the configured program for processes 0..n from the given inputs,
/// one atomic action per scheduler step. Throws InvalidSchedule for steps
/// naming crashed or terminated processes (unless the scheduler skips
/// them). Never-completing processes are reported as crashed.
ExecutionTrace run_protocol(const ProgramConfig& cfg, const std::vector<Label>& inputs,
                            Scheduler& sched, const CrashSet& crashes = {});

/// Base-labeled inputs 0..n.
std::vector<Label> base_inputs(int n);

/// Exact read/write counters of a trace (pure function of the steps).
OpCounters count_ops(const ExecutionTrace& trace);

struct EnumerationOptions {
    bool allow_crashes = false;
    /// Branch on the register read order as well as on the acting process.
    bool branch_read_order = false;
    std::size_t max_states = 50'000'000;
    int max_depth = 1'000'000;
};

struct EnumeratedOutput {
    Simplex outputs;            // final vertices of the decided processes
    std::vector<int> witness;   // schedule prefix reproducing it
};

struct EnumerationResult {
    std::vector<EnumeratedOutput> outputs;  // sorted by simplex
    std::size_t states_visited = 0;
};

/// Memoized depth-first exploration of every reachable interleaving at
/// atomic granularity. Crash-free mode collects the output simplex of each
/// completed run; crash mode collects the decided subset at every reachable
/// state (a run where the rest stop is a valid crashy execution).
/// Throws DepthExceeded / PreconditionViolated on the stated limits.
EnumerationResult enumerate_executions(const ProgramConfig& cfg,
                                       const std::vector<Label>& inputs,
                                       const EnumerationOptions& opts = {});

/// Scripted schedule realizing the facet of Ch^K sigma indexed by an
/// ordered partition of the participating processes: per round, each block
/// writes then collects before the next block runs. Non-participants are
/// never scheduled. Throws InvalidPartition.
std::vector<int> targeted_schedule(const std::vector<std::vector<int>>& partition,
                                   int n, int K = 1);

/// The facet of Ch sigma designated by an ordered partition of colors:
/// each member of block j is labeled with the union of blocks 1..j.
Simplex ordered_partition_facet(const Simplex& sigma,
                                const std::vector<std::vector<int>>& partition);

}  // namespace chroma

#endif
