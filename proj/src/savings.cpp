#include "chroma/savings.hpp"

#include "chroma/errors.hpp"

namespace chroma {

namespace {

ProgramConfig config_for(const Task& task, Protocol protocol,
                         const SpecializationTable* table) {
    ProgramConfig cfg;
    cfg.protocol = protocol;
    cfg.n = task.n;
    cfg.K = task.K;
    cfg.delta = &task.delta;
    cfg.table = table;
    return cfg;
}

std::vector<Label> task_inputs(const Task& task) { return base_inputs(task.n); }

PairedRun finish(const Task& task, ExecutionTrace generic, ExecutionTrace optimized) {
    PairedRun pr;
    pr.schedule = generic.executed;
    pr.generic_ops = count_ops(generic);
    pr.optimized_ops = count_ops(optimized);
    pr.identical_outputs = outputs_agree(generic, optimized);
    pr.generic = std::move(generic);
    pr.optimized = std::move(optimized);
    if (!pr.identical_outputs)
        throw OutputMismatch("optimized run diverged from the generic run");
    return pr;
}

}  // namespace

bool outputs_agree(const ExecutionTrace& generic, const ExecutionTrace& optimized) {
    if (generic.outcomes.size() != optimized.outcomes.size()) return false;
    for (std::size_t i = 0; i < generic.outcomes.size(); ++i) {
        const Outcome& g = generic.outcomes[i];
        const Outcome& o = optimized.outcomes[i];
        if ((g.kind == OutcomeKind::Decided) != (o.kind == OutcomeKind::Decided))
            return false;
        if (g.kind == OutcomeKind::Decided && g.output != o.output) return false;
    }
    return true;
}

PairedRun paired_run(const Task& task, const SpecializationTable& table,
                     Scheduler& opt_sched) {
    ProgramConfig opt_cfg = config_for(task, Protocol::IteratedOpt, &table);
    ExecutionTrace optimized = run_protocol(opt_cfg, task_inputs(task), opt_sched);

    ProgramConfig gen_cfg = config_for(task, Protocol::Iterated, nullptr);
    ScriptedScheduler replay(optimized.executed, /*skip_unschedulable=*/false,
                             /*extend_round_robin=*/true);
    ExecutionTrace generic = run_protocol(gen_cfg, task_inputs(task), replay);
    return finish(task, std::move(generic), std::move(optimized));
}

PairedRun paired_run_generic_script(const Task& task, const SpecializationTable& table,
                                    const std::vector<int>& generic_schedule) {
    ProgramConfig gen_cfg = config_for(task, Protocol::Iterated, nullptr);
    ScriptedScheduler gen_sched(generic_schedule);
    ExecutionTrace generic = run_protocol(gen_cfg, task_inputs(task), gen_sched);

    ProgramConfig opt_cfg = config_for(task, Protocol::IteratedOpt, &table);
    ScriptedScheduler opt_sched(generic_schedule, /*skip_unschedulable=*/true,
                                /*extend_round_robin=*/true);
    ExecutionTrace optimized = run_protocol(opt_cfg, task_inputs(task), opt_sched);
    return finish(task, std::move(generic), std::move(optimized));
}

SavingsReport savings_report(const Task& task, const SpecializationTable& table,
                             int samples, std::uint64_t seed, std::size_t keep_runs) {
    SavingsReport report;
    report.samples = samples;
    for (int i = 0; i < samples; ++i) {
        RandomScheduler sched(seed + static_cast<std::uint64_t>(i));
        PairedRun pr = paired_run(task, table, sched);
        for (int p = 0; p <= task.n; ++p) {
            const auto up = static_cast<std::size_t>(p);
            int g = pr.generic_ops.writes[up] + pr.generic_ops.reads[up];
            int o = pr.optimized_ops.writes[up] + pr.optimized_ops.reads[up];
            if (o > g) report.dominance = false;
        }
        report.generic_total_ops +=
            pr.generic_ops.total_writes + pr.generic_ops.total_reads;
        report.optimized_total_ops +=
            pr.optimized_ops.total_writes + pr.optimized_ops.total_reads;
        if (report.runs.size() < keep_runs) report.runs.push_back(std::move(pr));
    }
    return report;
}

}  // namespace chroma
