#ifndef CHROMA_SAVINGS_HPP
#define CHROMA_SAVINGS_HPP

#include "chroma/optimizer.hpp"
#include "chroma/simulator.hpp"

namespace chroma {

/// One generic/optimized pair of runs of a task's protocol over the same
/// schedule, compared per process.
struct PairedRun {
    std::vector<int> schedule;  // the generic run's pid sequence
    ExecutionTrace generic;
    ExecutionTrace optimized;
    OpCounters generic_ops;
    OpCounters optimized_ops;
    bool identical_outputs = false;
};

/// Optimized-run-first pairing: runs the table-driven protocol under the
/// given scheduler, then replays its executed step sequence for the
/// generic protocol, extended round-robin until every process finishes.
/// The optimized sequence is then exactly the generic schedule projected
/// onto the operations the optimized protocol still performs, so memory
/// contents agree step for step while both runs share the prefix.
PairedRun paired_run(const Task& task, const SpecializationTable& table,
                     Scheduler& opt_sched);

/// Generic-run-first pairing for a fixed script: the optimized replay
/// skips steps of processes that already decided and is extended
/// round-robin if it still needs operations past the script.
PairedRun paired_run_generic_script(const Task& task, const SpecializationTable& table,
                                    const std::vector<int>& generic_schedule);

/// Runs `samples` seeded paired runs and aggregates. Throws OutputMismatch
/// as soon as a pair disagrees (the optimizer's correctness contract). At
/// most `keep_runs` runs are retained with their traces.
struct SavingsReport {
    std::vector<PairedRun> runs;
    int samples = 0;
    long generic_total_ops = 0;
    long optimized_total_ops = 0;
    bool dominance = true;  // optimized <= generic per process on every run
};

SavingsReport savings_report(const Task& task, const SpecializationTable& table,
                             int samples, std::uint64_t seed,
                             std::size_t keep_runs = 10000);

/// Compares the two traces process by process (used by the pairings).
bool outputs_agree(const ExecutionTrace& generic, const ExecutionTrace& optimized);

}  // namespace chroma

#endif
